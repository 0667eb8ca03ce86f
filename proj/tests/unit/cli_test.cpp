#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "aqg/io/json.hpp"
#include "cli.hpp"

namespace aqg {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliDual, GroupAlgebraS3IsCommutative) {
  const auto r = run({"dual", "--builtin", "S3", "--side", "group-algebra"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::parse_json(r.out);
  const auto d = io::quantum_group_from_json(j["quantum_group"]);
  EXPECT_EQ(d.dim(), 6u);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t k = 0; k < 6; ++k)
      for (std::size_t l = 0; l < 6; ++l) EXPECT_EQ(d.mult(i, k, l), d.mult(k, i, l));
  EXPECT_EQ(j["pairing"].size(), 6u);
}

TEST(CliDual, TwiceReproducesZ2) {
  const auto once = run({"dual", "--builtin", "Z2", "--side", "function-algebra"});
  const auto twice = run({"dual", "--input", "-"}, once.out);
  ASSERT_EQ(twice.code, 0) << twice.err;
  const auto back = io::quantum_group_from_json(io::parse_json(twice.out)["quantum_group"]);
  const auto original = io::quantum_group_from_json(io::parse_json(run({"fixture", "--builtin", "Z2"}).out));
  EXPECT_FALSE(structure_difference(back, original));
}

TEST(CliDual, BidualReproducesSweedler) {
  const auto r = run({"dual", "--sweedler", "--bidual"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto back = io::quantum_group_from_json(io::parse_json(r.out)["quantum_group"]);
  const auto original = io::quantum_group_from_json(io::parse_json(run({"fixture", "--sweedler"}).out));
  EXPECT_FALSE(structure_difference(back, original));
}

TEST(CliDual, ExitCodes) {
  const auto path = temp_file("malformed.json", "{\"dim\": 2, \"mult\": [");
  const auto malformed = run({"dual", "--input", path});
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find("position"), std::string::npos);

  auto j = io::parse_json(run({"fixture", "--builtin", "Z3"}).out);
  j["counit"][1] = 1;
  const auto broken = run({"dual", "--input", "-"}, j.dump());
  EXPECT_EQ(broken.code, 3);
  EXPECT_NE(broken.out.find("\"fail\""), std::string::npos);

  EXPECT_EQ(run({"dual"}).code, 2);
  EXPECT_EQ(run({"dual", "--builtin", "Z9"}).code, 2);
  EXPECT_EQ(run({"dual", "--input", "/nonexistent.json"}).code, 2);
}

TEST(CliFixture, GroupTableInput) {
  const auto table = io::group_table_to_json(builtin_group("Z3")).dump();
  const auto r = run({"fixture", "--group-table", "-", "--side", "group-algebra"}, table);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::quantum_group_from_json(io::parse_json(r.out)).dim(), 3u);
}

TEST(CliFourier, FiniteRoundTrip) {
  const auto forward = run({"fourier", "--builtin", "Z2", "--element", "[1,0]"});
  ASSERT_EQ(forward.code, 0) << forward.err;
  const auto back = run({"fourier", "--inverse", "--plain"}, forward.out);
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(back.out, "[1,0]\n");
}

TEST(CliFourier, RoundTripThroughInputFile) {
  const auto path = temp_file("sweedler.json", run({"fixture", "--sweedler"}).out);
  const auto forward = run({"fourier", "--input", path, "--element", "[1, \"1/2\", 0, -3]"});
  ASSERT_EQ(forward.code, 0) << forward.err;
  const auto back = run({"fourier", "--input", path, "--inverse", "--plain"}, forward.out);
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(back.out, "[1,[1,2],0,-3]\n");
}

TEST(CliFourier, DomainMismatch) {
  const auto forward = run({"fourier", "--builtin", "Z2", "--element", "[1,0]"});
  EXPECT_EQ(run({"fourier"}, forward.out).code, 3);
  EXPECT_EQ(run({"fourier", "--inverse", "--builtin", "Z3"}, forward.out).code, 3);
  EXPECT_EQ(run({"fourier", "--builtin", "Z2", "--element", "[1,0,0]"}).code, 3);
  EXPECT_EQ(run({"fourier", "--builtin", "Z2", "--element", "[1,"}).code, 2);
}

TEST(CliFourier, PadicBall) {
  const auto r = run({"fourier", "--padic", "--prime", "5", "--ball", "5^1*Zp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = io::schwartz_from_json(io::parse_json(r.out));
  EXPECT_EQ(f, schwartz_scale(subgroup_indicator(5, -1), Cyclotomic(make_rational(1, 5))));
}

TEST(CliFourier, PadicRoundTrip) {
  const auto forward = run({"fourier", "--padic", "--prime", "3", "--ball", "1 + 2*3^-1 + 3^1*Zp"});
  ASSERT_EQ(forward.code, 0) << forward.err;
  const auto back = run({"fourier", "--padic", "--inverse"}, forward.out);
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(io::schwartz_from_json(io::parse_json(back.out)),
            indicator(parse_ball("1 + 2*3^-1 + 3^1*Zp", 3)));
  EXPECT_EQ(run({"fourier", "--padic", "--prime", "5"}, forward.out).code, 3);
  EXPECT_EQ(run({"fourier", "--padic", "--prime", "4", "--ball", "Zp"}).code, 2);
}

TEST(CliFourier, LaurentPair) {
  EXPECT_EQ(run({"fourier", "--pair", "laurent", "--element", "e_3"}).out, "delta_3\n");
  EXPECT_EQ(run({"fourier", "--pair", "laurent", "--inverse", "--element", "delta_-2"}).out, "e_-2\n");
  EXPECT_EQ(run({"fourier", "--pair", "laurent", "--element", "x_3"}).code, 2);
}

TEST(CliPadic, Examples) {
  EXPECT_EQ(run({"padic", "norm", "--prime", "5", "1*5^-2+3"}).out, "25\n");
  EXPECT_EQ(run({"padic", "char", "--prime", "2", "1*2^-1", "1"}).out, "zeta(2)^1\n");
  EXPECT_EQ(run({"padic", "integrate", "--prime", "3", "--ball", "3^2*Zp"}).out, "1/9\n");
  EXPECT_EQ(run({"padic", "eval", "--prime", "2", "1 + 1"}).out, "1*2^1\n");
  EXPECT_EQ(run({"padic", "eval", "--prime", "3", "--rational", "2*3^-1 + 1"}).out, "5/3\n");
  EXPECT_EQ(run({"padic", "norm", "--prime", "5", "0"}).out, "0\n");
}

TEST(CliPadic, ParseErrors) {
  EXPECT_EQ(run({"padic", "norm", "--prime", "5", "7*5^0"}).code, 2);
  EXPECT_EQ(run({"padic", "norm", "--prime", "6", "1"}).code, 2);
  EXPECT_EQ(run({"padic", "integrate", "--prime", "3", "--ball", "3^2*Z"}).code, 2);
  EXPECT_EQ(run({"padic", "norm"}).code, 2);
}

TEST(CliCheck, ReportStreamAndSummary) {
  const auto r = run({"check", "--suite", "laurent,group-like", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line, last;
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    const auto j = io::parse_json(line);
    if (j.contains("summary")) {
      last = line;
    } else {
      ++records;
      EXPECT_FALSE(j.contains("elapsed_ms"));
    }
  }
  const auto summary = io::parse_json(last)["summary"];
  EXPECT_EQ(summary["total"], records);
  EXPECT_EQ(summary["failed"], 0);
  EXPECT_EQ(summary["seed"], 9);
  EXPECT_EQ(summary["backend"], "exact");
}

TEST(CliCheck, Deterministic) {
  const std::vector<std::string> args{"check", "--suite", "all", "--seed", "42", "--random-elements", "10",
                                      "--random-schwartz", "10"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliCheck, CorruptedFixtureFails) {
  auto j = io::parse_json(run({"fixture", "--builtin", "Z3"}).out);
  j["mult"].push_back(io::Json::array({0, 1, 1, 1}));
  const auto path = temp_file("corrupt.json", j.dump());
  const auto r = run({"check", "--suite", "axioms", "--input", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("\"witness\":\"i="), std::string::npos);
}

TEST(CliCheck, BackendFromEnvironment) {
  ::setenv("AQG_BACKEND", "float", 1);
  const auto r = run({"check", "--suite", "convolution"});
  ::unsetenv("AQG_BACKEND");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"backend\":\"float\""), std::string::npos);
  ::setenv("AQG_BACKEND", "quad", 1);
  EXPECT_EQ(run({"check", "--suite", "convolution"}).code, 2);
  ::unsetenv("AQG_BACKEND");
  EXPECT_EQ(run({"check", "--suite", "convolution", "--backend", "exact"}).code, 0);
}

TEST(CliCheck, TimingAndBadOptions) {
  const auto r = run({"check", "--suite", "laurent", "--timing"});
  EXPECT_NE(r.out.find("elapsed_ms"), std::string::npos);
  EXPECT_EQ(run({"check", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"check", "--prime", "2,9"}).code, 2);
  EXPECT_EQ(run({"check", "--tolerance", "-1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace aqg
