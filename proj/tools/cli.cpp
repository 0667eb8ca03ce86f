#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "aqg/core/axioms.hpp"
#include "aqg/core/dual.hpp"
#include "aqg/core/fourier.hpp"
#include "aqg/error.hpp"
#include "aqg/examples/fixtures.hpp"
#include "aqg/examples/laurent_pair.hpp"
#include "aqg/io/json.hpp"
#include "aqg/padic/schwartz.hpp"
#include "aqg/suites/suites.hpp"

namespace aqg::cli {

namespace {

using io::Json;

/// Input that cannot be read at all: exit 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A check ran and failed, with its report already written: exit 1.
struct CheckFailed {};

/// Axiom failure on an input quantum group, with its report already written: exit 3.
struct AxiomFailure {};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path, std::istream& in) {
  const auto text = read_source(path, in);
  try {
    return io::parse_json(text);
  } catch (const ParseError& e) {
    throw ParseError((path == "-" ? std::string("stdin") : path) + ": " + e.detail(), e.position());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

/// Exchange files written by `dual` wrap the quantum group with its pairing.
QuantumGroupData<Cyclotomic> quantum_group_from_file(const Json& j) {
  if (j.is_object() && j.contains("quantum_group")) return io::quantum_group_from_json(j["quantum_group"]);
  return io::quantum_group_from_json(j);
}

struct FiniteSource {
  std::string builtin;
  std::string side = "function-algebra";
  bool sweedler = false;
  std::string input;

  void add_to(CLI::App* app) {
    app->add_option("--builtin", builtin, "builtin group: Z2, Z3, Z4, Z2xZ2, S3, trivial");
    app->add_option("--side", side, "function-algebra or group-algebra")
        ->check(CLI::IsMember({"function-algebra", "group-algebra"}));
    app->add_flag("--sweedler", sweedler, "Sweedler's 4-dimensional Hopf algebra");
  }

  bool given() const { return !builtin.empty() || sweedler || !input.empty(); }
};

ExactQuantumGroupPtr builtin_fixture(const std::string& side, const std::string& group) {
  FiniteGroupTable g = [&] {
    try {
      return builtin_group(group);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }();
  return side == "group-algebra" ? group_algebra(g) : function_algebra(g);
}

/// Owner ids: "function-algebra:G", "group-algebra:G", "sweedler", or the name of an input file's quantum group.
std::string owner_id(const FiniteSource& s, const ExactQuantumGroupPtr& a) {
  if (s.sweedler) return "sweedler";
  if (!s.builtin.empty()) return s.side + ":" + s.builtin;
  return a->name();
}

ExactQuantumGroupPtr resolve_owner(const std::string& id) {
  if (id == "sweedler") return sweedler_fixture();
  const auto colon = id.find(':');
  if (colon != std::string::npos) {
    const auto side = id.substr(0, colon);
    if (side == "function-algebra" || side == "group-algebra") return builtin_fixture(side, id.substr(colon + 1));
  }
  throw PreconditionError("cannot resolve owner '" + id + "'; pass --input with its quantum group");
}

ExactQuantumGroupPtr load_finite(const FiniteSource& s, std::istream& in) {
  const int sources = !s.builtin.empty() + s.sweedler + !s.input.empty();
  if (sources > 1) throw InputError("choose one of --builtin, --sweedler, --input");
  if (s.sweedler) return sweedler_fixture();
  if (!s.builtin.empty()) return builtin_fixture(s.side, s.builtin);
  return ExactQuantumGroup::create(quantum_group_from_file(read_json(s.input, in)));
}

void write_failures(const CheckReport& report, std::ostream& out) {
  for (const auto& r : report.records()) {
    if (r.status == CheckStatus::fail) out << io::record_to_json(r, false).dump() << '\n';
  }
}

void require_axioms(const ExactQuantumGroup& a, std::ostream& out) {
  const auto report = verify_axioms(a);
  if (!report.all_passed()) {
    write_failures(report, out);
    throw AxiomFailure{};
  }
}

struct DualCommand {
  FiniteSource source;
  bool bidual = false;
  bool pretty = false;

  void attach(CLI::App* app) {
    source.add_to(app);
    app->add_option("--input", source.input, "quantum group file, '-' for stdin");
    app->add_flag("--bidual", bidual, "emit the double dual identified with the input through evaluation");
    app->add_flag("--pretty", pretty, "indented output");
  }

  void run(std::istream& in, std::ostream& out) const {
    if (!source.given()) throw InputError("dual needs --builtin, --sweedler or --input");
    const auto a = load_finite(source, in);
    require_axioms(*a, out);
    Json j;
    if (bidual) {
      j["quantum_group"] = io::quantum_group_to_json(canonical_bidual(*a));
    } else {
      const auto d = build_dual(*a);
      j["quantum_group"] = io::quantum_group_to_json(d.dual->data());
      j["pairing"] = io::matrix_to_json(d.pairing);
    }
    out << j.dump(pretty ? 2 : -1) << '\n';
  }
};

struct FixtureCommand {
  FiniteSource source;
  std::string group_table;

  void attach(CLI::App* app) {
    source.add_to(app);
    app->add_option("--group-table", group_table, "group table file, '-' for stdin");
  }

  void run(std::istream& in, std::ostream& out) const {
    if (!group_table.empty()) {
      if (source.sweedler || !source.builtin.empty()) throw InputError("--group-table excludes other sources");
      const auto g = io::group_table_from_json(read_json(group_table, in));
      const auto a = source.side == "group-algebra" ? group_algebra(g) : function_algebra(g);
      out << io::quantum_group_to_json(a->data()).dump() << '\n';
      return;
    }
    if (!source.given()) throw InputError("fixture needs --builtin, --sweedler or --group-table");
    out << io::quantum_group_to_json(load_finite(source, in)->data()).dump() << '\n';
  }
};

struct FourierCommand {
  FiniteSource source;
  std::optional<std::string> element;
  bool inverse = false;
  bool plain = false;
  bool padic = false;
  unsigned prime = 0;
  std::string ball;
  std::string pair;

  void attach(CLI::App* app) {
    source.add_to(app);
    app->add_option("--input", source.input, "quantum group file (finite) or Schwartz function file (--padic)");
    app->add_option("--element", element, "coordinates as a JSON array, or a Laurent literal with --pair");
    app->add_flag("--inverse", inverse, "apply the inverse transform");
    app->add_flag("--plain", plain, "print only the coordinates or a text form");
    app->add_flag("--padic", padic, "Schwartz functions on Q_p");
    app->add_option("--prime", prime, "prime for --padic");
    app->add_option("--ball", ball, "indicator of a ball such as '5^1*Zp' or '1 + 3^2*Zp'");
    app->add_option("--pair", pair, "transform on a dual pair; only 'laurent'")->check(CLI::IsMember({"laurent"}));
  }

  void run(std::istream& in, std::ostream& out) const {
    if (!pair.empty()) return run_pair(out);
    if (padic) return run_padic(in, out);
    run_finite(in, out);
  }

  void run_pair(std::ostream& out) const {
    if (!element) throw InputError("--pair needs --element");
    const auto x = io::parse_sparse_element(*element);
    out << to_string(inverse ? pair_inverse_fourier(x) : pair_fourier(x)) << '\n';
  }

  void run_padic(std::istream& in, std::ostream& out) const {
    SchwartzFunction f = [&] {
      if (!ball.empty()) {
        if (prime == 0) throw InputError("--ball needs --prime");
        try {
          require_prime(prime);
        } catch (const PreconditionError& e) {
          throw InputError(e.what());
        }
        return indicator(parse_ball(ball, prime));
      }
      return io::schwartz_from_json(read_json(source.input.empty() ? "-" : source.input, in));
    }();
    if (prime != 0) require_same_prime(prime, f.prime());
    const auto g = canonicalize(inverse ? padic_inverse_fourier(f) : padic_fourier(f));
    if (plain) {
      out << to_string(g) << '\n';
    } else {
      out << io::schwartz_to_json(g).dump() << '\n';
    }
  }

  void run_finite(std::istream& in, std::ostream& out) const {
    const std::string expected_kind = inverse ? "functional" : "element";
    ExactQuantumGroupPtr a;
    std::string id;
    std::vector<Cyclotomic> coords;
    if (source.given()) {
      a = load_finite(source, in);
      id = owner_id(source, a);
    }
    if (element) {
      if (!a) throw InputError("--element needs --builtin, --sweedler or --input");
      coords = io::vector_from_json(io::parse_json(*element));
    } else {
      if (source.input == "-") throw InputError("stdin cannot carry both the quantum group and the coordinates");
      const auto record = io::coords_from_json(read_json("-", in));
      if (record.kind != expected_kind) {
        throw PreconditionError("expected kind '" + expected_kind + "', got '" + record.kind + "'");
      }
      if (!a) {
        a = resolve_owner(record.owner);
        id = record.owner;
      } else if (record.owner != id) {
        throw OwnerMismatch();
      }
      coords = record.coords;
    }
    if (coords.size() != a->dim()) {
      throw PreconditionError("expected " + std::to_string(a->dim()) + " coordinates, got " +
                              std::to_string(coords.size()));
    }
    std::vector<Cyclotomic> result;
    if (inverse) {
      result = inverse_fourier(Functional<Cyclotomic>{a, coords}).coords;
    } else {
      result = fourier(Element<Cyclotomic>{a, coords}).values;
    }
    if (plain) {
      out << io::vector_to_json(result).dump() << '\n';
    } else {
      out << io::coords_to_json(id, inverse ? "element" : "functional", result).dump() << '\n';
    }
  }
};

struct CheckCommand {
  std::string suites = "all";
  std::string backend;
  double tolerance = kDefaultTolerance;
  unsigned long long seed = 42;
  std::string primes = "2,3,5,7";
  std::string input;
  std::size_t random_elements = 100;
  std::size_t random_schwartz = 50;
  bool timing = false;

  void attach(CLI::App* app) {
    app->add_option("--suite", suites, "comma-separated suites or 'all'");
    app->add_option("--backend", backend, "exact or float (default: $AQG_BACKEND, else exact)");
    app->add_option("--tolerance", tolerance, "float backend tolerance")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "random seed");
    app->add_option("--prime", primes, "comma-separated primes for the p-adic suites");
    app->add_option("--input", input, "quantum group file checked by the axioms suite");
    app->add_option("--random-elements", random_elements, "random elements per fixture");
    app->add_option("--random-schwartz", random_schwartz, "random Schwartz pairs");
    app->add_flag("--timing", timing, "include elapsed_ms in every record");
  }

  SuiteOptions options() const {
    SuiteOptions o;
    std::string name = backend;
    if (name.empty()) {
      const char* env = std::getenv("AQG_BACKEND");
      name = env && *env ? env : "exact";
    }
    try {
      o.backend = parse_backend(name);
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
    o.tolerance = tolerance;
    o.seed = seed;
    o.random_elements = random_elements;
    o.random_schwartz = random_schwartz;
    o.primes.clear();
    for (const auto& p : split(primes, ',')) {
      unsigned value = 0;
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(p, &used);
        if (used != p.size() || v > 1000) throw std::invalid_argument(p);
        value = static_cast<unsigned>(v);
        require_prime(value);
      } catch (const std::exception&) {
        throw InputError("invalid prime '" + p + "'");
      }
      o.primes.push_back(value);
    }
    return o;
  }

  void run(std::istream& in, std::ostream& out) const {
    const auto o = options();
    std::vector<std::string> names;
    for (const auto& s : split(suites, ',')) {
      if (s == "all") {
        names.insert(names.end(), suite_names().begin(), suite_names().end());
      } else if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
        throw InputError("unknown suite '" + s + "'");
      } else {
        names.push_back(s);
      }
    }
    if (names.empty()) throw InputError("no suite selected");
    std::optional<QuantumGroupData<Cyclotomic>> data;
    if (!input.empty()) data = quantum_group_from_file(read_json(input, in));

    CheckReport report;
    for (const auto& name : names) {
      const auto part = name == "axioms" && data ? axioms_report(*data, o) : run_suite(name, o);
      for (const auto& r : part.records()) out << io::record_to_json(r, timing).dump() << '\n';
      report.append(part);
    }
    out << io::summary_to_json(io::summarize(report, o.seed, to_string(o.backend))).dump() << '\n';
    if (!report.all_passed()) throw CheckFailed{};
  }
};

struct PadicCommand {
  CLI::App* eval = nullptr;
  CLI::App* norm = nullptr;
  CLI::App* chr = nullptr;
  CLI::App* integrate = nullptr;
  unsigned prime = 0;
  std::vector<std::string> literals;
  std::string ball;
  std::string input;
  bool rational = false;

  void attach(CLI::App* app) {
    app->require_subcommand(1);
    eval = app->add_subcommand("eval", "canonical expansion of a literal");
    norm = app->add_subcommand("norm", "|x|_p = p^{-v(x)}");
    chr = app->add_subcommand("char", "chi(x, y) = exp(2 pi i {xy}) as a root of unity");
    integrate = app->add_subcommand("integrate", "Haar integral of a ball indicator or a Schwartz function");
    for (auto* sub : {eval, norm, chr, integrate}) sub->add_option("--prime", prime, "prime")->required();
    eval->add_option("x", literals, "p-adic literal")->required()->expected(1);
    eval->add_flag("--rational", rational, "print the rational value instead");
    norm->add_option("x", literals, "p-adic literal")->required()->expected(1);
    chr->add_option("xy", literals, "two p-adic literals")->required()->expected(2);
    integrate->add_option("--ball", ball, "ball such as '3^2*Zp'");
    integrate->add_option("--input", input, "Schwartz function file, '-' for stdin");
  }

  void run(std::istream& in, std::ostream& out) const {
    try {
      require_prime(prime);
    } catch (const PreconditionError& e) {
      throw InputError(e.what());
    }
    if (eval->parsed()) {
      const auto x = parse_padic(literals.at(0), prime);
      out << (rational ? to_string(x.value()) : format_padic(x)) << '\n';
    } else if (norm->parsed()) {
      out << to_string(valuation_norm(parse_padic(literals.at(0), prime)).norm) << '\n';
    } else if (chr->parsed()) {
      const auto x = parse_padic(literals.at(0), prime);
      const auto y = parse_padic(literals.at(1), prime);
      out << to_string(character_root(x, y)) << '\n';
    } else {
      if (ball.empty() == input.empty()) throw InputError("integrate needs exactly one of --ball, --input");
      const auto f = ball.empty() ? io::schwartz_from_json(read_json(input, in)) : indicator(parse_ball(ball, prime));
      require_same_prime(prime, f.prime());
      out << to_string(haar_integral(f)) << '\n';
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebraic quantum groups, duality and Fourier transforms", "aqg"};
  app.require_subcommand(1);
  DualCommand dual;
  FixtureCommand fixture;
  FourierCommand fourier_cmd;
  CheckCommand check;
  PadicCommand padic;
  auto* dual_app = app.add_subcommand("dual", "dual quantum group and pairing matrix");
  auto* fixture_app = app.add_subcommand("fixture", "write a builtin quantum group in the exchange format");
  auto* fourier_app = app.add_subcommand("fourier", "Fourier transform of an element or Schwartz function");
  auto* check_app = app.add_subcommand("check", "run property suites and stream check records");
  auto* padic_app = app.add_subcommand("padic", "p-adic arithmetic");
  dual.attach(dual_app);
  fixture.attach(fixture_app);
  fourier_cmd.attach(fourier_app);
  check.attach(check_app);
  padic.attach(padic_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (dual_app->parsed()) dual.run(in, out);
    if (fixture_app->parsed()) fixture.run(in, out);
    if (fourier_app->parsed()) fourier_cmd.run(in, out);
    if (check_app->parsed()) check.run(in, out);
    if (padic_app->parsed()) padic.run(in, out);
  } catch (const CheckFailed&) {
    return check_failed;
  } catch (const AxiomFailure&) {
    err << "error: input fails the quantum group axioms\n";
    return semantic_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return input_error;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return semantic_error;
  }
  out.flush();
  return ok;
}

}  // namespace aqg::cli
