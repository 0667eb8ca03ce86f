#include <gtest/gtest.h>

#include "aqg/error.hpp"
#include "aqg/suites/suites.hpp"

namespace aqg {
namespace {

SuiteOptions small_options(Backend backend = Backend::exact) {
  SuiteOptions o;
  o.backend = backend;
  o.random_elements = 5;
  o.random_schwartz = 8;
  o.primes = {2, 3};
  return o;
}

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& rec : r.records()) {
    if (rec.status == CheckStatus::fail) out += rec.case_name + ": " + rec.witness.value_or("") + "\n";
  }
  return out;
}

TEST(Suites, EverySuitePassesInBothBackends) {
  for (const auto backend : {Backend::exact, Backend::floating}) {
    for (const auto& name : suite_names()) {
      const auto r = run_suite(name, small_options(backend));
      EXPECT_GT(r.records().size(), 0u) << name;
      EXPECT_TRUE(r.all_passed()) << name << " " << to_string(backend) << "\n" << failures(r);
    }
  }
}

TEST(Suites, DeterministicUnderSeed) {
  auto names = [](const CheckReport& r) {
    std::vector<std::string> out;
    for (const auto& rec : r.records()) out.push_back(rec.case_name + to_string(rec.status));
    return out;
  };
  const auto a = run_suite("all", small_options());
  const auto b = run_suite("all", small_options());
  EXPECT_EQ(names(a), names(b));
}

TEST(Suites, UnknownNamesAndBackends) {
  EXPECT_THROW(run_suite("nope", small_options()), PreconditionError);
  EXPECT_THROW(parse_backend("double"), PreconditionError);
  EXPECT_EQ(parse_backend("float"), Backend::floating);
}

TEST(Suites, AxiomsReportFlagsCorruptedData) {
  auto data = finite_fixtures().front()->data();
  data.mult(0, 1, 1) = Cyclotomic(1);
  const auto r = axioms_report(data, small_options());
  EXPECT_FALSE(r.all_passed());
  const auto* rec = r.find(data.name + ":associativity");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->status, CheckStatus::fail);
}

TEST(Suites, FixtureList) {
  const auto all = finite_fixtures();
  EXPECT_EQ(all.size(), 12u);
  EXPECT_EQ(all.back()->name(), "sweedler");
}

}  // namespace
}  // namespace aqg
