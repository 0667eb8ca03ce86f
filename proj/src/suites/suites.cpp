#include "aqg/suites/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "aqg/core/axioms.hpp"
#include "aqg/core/dual.hpp"
#include "aqg/core/fourier.hpp"
#include "aqg/core/group_like.hpp"
#include "aqg/core/random.hpp"
#include "aqg/core/types.hpp"
#include "aqg/error.hpp"
#include "aqg/examples/laurent_pair.hpp"
#include "aqg/oracles/oracles.hpp"
#include "aqg/padic/schwartz.hpp"

namespace aqg {

namespace {

const std::vector<std::string> kGroups{"Z2", "Z3", "Z4", "Z2xZ2", "S3"};

template <class T>
struct Tag {
  using type = T;
};

template <class F>
void with_backend(const SuiteOptions& options, F&& body) {
  if (options.backend == Backend::exact) {
    body(Tag<Cyclotomic>{});
  } else {
    body(Tag<ApproxComplex>{});
  }
}

template <Scalar S>
QuantumGroupPtr<S> in_backend(const ExactQuantumGroupPtr& a, double tolerance) {
  if constexpr (std::is_same_v<S, Cyclotomic>) {
    return a;
  } else {
    return FiniteQuantumGroup<S>::create(convert_data<S>(a->data(), tolerance));
  }
}

Rng make_rng(const SuiteOptions& options, unsigned long long salt) {
  return Rng(options.seed * 0x9E3779B97F4A7C15ULL + salt);
}

/// Records one case, timing the body.
void run_case(CheckReport& report, const std::string& suite, const std::string& name,
              const std::function<std::optional<std::string>()>& body) {
  Stopwatch clock;
  std::optional<std::string> witness;
  try {
    witness = body();
  } catch (const Error& e) {
    witness = std::string("error: ") + e.what();
  }
  report.record(suite, name, std::move(witness), clock.elapsed_ms());
}

template <Scalar S>
std::string coords_string(const std::vector<S>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + "]";
}

std::vector<std::pair<SchwartzFunction, SchwartzFunction>> schwartz_family(const SuiteOptions& options) {
  std::vector<std::pair<SchwartzFunction, SchwartzFunction>> out;
  if (options.primes.empty()) return out;
  Rng rng = make_rng(options, 501);
  for (std::size_t i = 0; i < options.random_schwartz; ++i) {
    const unsigned p = options.primes[i % options.primes.size()];
    auto f = random_schwartz(p, rng);
    auto g = random_schwartz(p, rng);
    out.emplace_back(std::move(f), std::move(g));
  }
  return out;
}

Rational power(unsigned p, long e) {
  Rational out(1);
  for (long i = 0; i < std::labs(e); ++i) out *= p;
  return e < 0 ? Rational(1) / out : out;
}

}  // namespace

const char* to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(const std::string& name) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  throw PreconditionError("unknown backend '" + name + "' (expected exact or float)");
}

std::vector<ExactQuantumGroupPtr> finite_fixtures() {
  std::vector<ExactQuantumGroupPtr> out;
  for (const auto& g : kGroups) {
    out.push_back(function_algebra(builtin_group(g)));
    out.push_back(group_algebra(builtin_group(g)));
  }
  out.push_back(function_algebra(trivial_group()));
  out.push_back(sweedler_fixture());
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",     "duality", "inversion", "convolution", "plancherel",
                                              "types",      "group-like", "laurent", "padic",       "oracle"};
  return names;
}

CheckReport axioms_report(const QuantumGroupData<Cyclotomic>& data, const SuiteOptions& options) {
  CheckReport report;
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    const auto a = in_backend<S>(ExactQuantumGroup::create(data), options.tolerance);
    report.append(verify_axioms(*a, "axioms"));
  });
  return report;
}

CheckReport inversion_checks(const SuiteOptions& options) {
  CheckReport report;
  Rng rng = make_rng(options, 101);
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    for (const auto& exact : finite_fixtures()) {
      const auto a = in_backend<S>(exact, options.tolerance);
      run_case(report, "inversion", a->name() + ":round_trip_basis", [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < a->dim(); ++i) {
          const auto e = basis_element(a, i);
          if (inverse_fourier(fourier(e)).coords != e.coords) return "basis " + a->data().labels[i];
        }
        return std::nullopt;
      });
      run_case(report, "inversion", a->name() + ":round_trip_random", [&]() -> std::optional<std::string> {
        for (std::size_t n = 0; n < options.random_elements; ++n) {
          const auto x = random_element(a, rng, options.tolerance);
          if (inverse_fourier(fourier(x)).coords != x.coords) return "a=" + coords_string(x.coords);
        }
        return std::nullopt;
      });
    }
  });
  return report;
}

CheckReport lemma_checks(const SuiteOptions& options) {
  CheckReport report;
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    for (const auto& exact : finite_fixtures()) {
      const auto a = in_backend<S>(exact, options.tolerance);
      run_case(report, "inversion", a->name() + ":lemma_identity", [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < a->dim(); ++i) {
          if (auto w = inversion_identity_witness(basis_element(a, i))) return "a=" + a->data().labels[i] + " " + *w;
        }
        return std::nullopt;
      });
    }
  });
  return report;
}

CheckReport convolution_checks(const SuiteOptions& options) {
  CheckReport report;
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    for (const auto& exact : finite_fixtures()) {
      const auto a = in_backend<S>(exact, options.tolerance);
      const auto& labels = a->data().labels;
      run_case(report, "convolution", a->name() + ":convolution_theorem", [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < a->dim(); ++i)
          for (std::size_t j = 0; j < a->dim(); ++j) {
            const auto x = basis_element(a, i), y = basis_element(a, j);
            if (fourier(convolve(x, y)).values != multiply(fourier(x), fourier(y)).values) {
              return "a=" + labels[i] + " b=" + labels[j];
            }
          }
        return std::nullopt;
      });
      run_case(report, "convolution", a->name() + ":formulas_agree", [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < a->dim(); ++i)
          for (std::size_t j = 0; j < a->dim(); ++j) {
            const auto x = basis_element(a, i), y = basis_element(a, j);
            if (convolve(x, y).coords != convolve_alternate(x, y).coords) return "a=" + labels[i] + " b=" + labels[j];
          }
        return std::nullopt;
      });
    }
  });
  return report;
}

CheckReport plancherel_checks(const SuiteOptions& options) {
  CheckReport report;
  Rng rng = make_rng(options, 201);
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    for (const auto& exact : finite_fixtures()) {
      if (!exact->is_star()) continue;
      const auto a = in_backend<S>(exact, options.tolerance);
      std::optional<std::string> identity, positivity;
      Stopwatch clock;
      for (std::size_t n = 0; n < options.random_elements && !(identity && positivity); ++n) {
        const auto x = random_element(a, rng, options.tolerance);
        const auto r = plancherel_check(x, options.tolerance, "plancherel", "case");
        const auto* id = r.find("case:identity");
        const auto* pos = r.find("case:positivity");
        if (!identity && id->status == CheckStatus::fail) identity = "a=" + coords_string(x.coords) + " " + *id->witness;
        if (!positivity && pos->status == CheckStatus::fail) positivity = "a=" + coords_string(x.coords) + " " + *pos->witness;
      }
      const double ms = clock.elapsed_ms();
      report.record("plancherel", a->name() + ":plancherel_identity", identity, ms);
      report.record("plancherel", a->name() + ":plancherel_positivity", positivity);
    }
  });
  return report;
}

CheckReport duality_checks(const SuiteOptions& options) {
  CheckReport report;
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    for (const auto& exact : finite_fixtures()) {
      const auto a = in_backend<S>(exact, options.tolerance);
      run_case(report, "duality", a->name() + ":dual_axioms", [&]() -> std::optional<std::string> {
        const auto r = verify_axioms(*build_dual(*a).dual);
        for (const auto& rec : r.records()) {
          if (rec.status == CheckStatus::fail) return rec.case_name + " " + rec.witness.value_or("");
        }
        return std::nullopt;
      });
      run_case(report, "duality", a->name() + ":bidual", [&]() -> std::optional<std::string> {
        if (auto diff = structure_difference(canonical_bidual(*a), a->data())) return "differs in " + *diff;
        return std::nullopt;
      });
    }
    for (const auto& name : kGroups) {
      const auto g = builtin_group(name);
      const auto fa = in_backend<S>(function_algebra(g), options.tolerance);
      const auto ga = in_backend<S>(group_algebra(g), options.tolerance);
      run_case(report, "duality", ga->name() + ":dual_is_function_algebra", [&]() -> std::optional<std::string> {
        const auto dual = build_dual(*ga).dual;
        std::vector<std::size_t> perm(g.order());
        for (std::size_t k = 0; k < g.order(); ++k) perm[k] = g.inverse(k);
        const auto matched = change_basis(dual->data(), permutation_change<S>(perm), dual->data().labels);
        if (auto diff = structure_difference(matched, fa->data())) return "differs in " + *diff;
        return std::nullopt;
      });
      run_case(report, "duality", fa->name() + ":dual_is_group_algebra", [&]() -> std::optional<std::string> {
        if (auto diff = structure_difference(build_dual(*fa).dual->data(), ga->data())) return "differs in " + *diff;
        return std::nullopt;
      });
    }
  });
  return report;
}

CheckReport type_checks(const SuiteOptions& options) {
  CheckReport report;
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    for (const auto& name : kGroups) {
      const auto g = builtin_group(name);
      const auto fa = in_backend<S>(function_algebra(g), options.tolerance);
      const auto ga = in_backend<S>(group_algebra(g), options.tolerance);
      run_case(report, "types", fa->name() + ":cointegral_span", [&]() -> std::optional<std::string> {
        const auto h = find_cointegral(fa);
        if (h.size() != 1) return "dimension " + std::to_string(h.size());
        if (h[0].coords != unit_vector<S>(g.order(), g.identity())) return "h=" + coords_string(h[0].coords);
        return std::nullopt;
      });
      run_case(report, "types", ga->name() + ":cointegral_span", [&]() -> std::optional<std::string> {
        const auto h = find_cointegral(ga);
        if (h.size() != 1) return "dimension " + std::to_string(h.size());
        if (h[0].coords != std::vector<S>(g.order(), S(1))) return "h=" + coords_string(h[0].coords);
        return std::nullopt;
      });
    }
    for (const auto& exact : finite_fixtures()) {
      const auto a = in_backend<S>(exact, options.tolerance);
      run_case(report, "types", a->name() + ":classify", [&]() -> std::optional<std::string> {
        const auto t = classify_type(a);
        if (!t.compact || !t.discrete) {
          return std::string("compact=") + (t.compact ? "true" : "false") + " discrete=" + (t.discrete ? "true" : "false");
        }
        return std::nullopt;
      });
      report.append(dual_type_check(a, "types"));
    }
  });
  report.append(laurent_type_certificates("types"));
  return report;
}

CheckReport group_like_checks(const SuiteOptions& options) {
  CheckReport report;
  with_backend(options, [&](auto tag) {
    using S = typename decltype(tag)::type;
    const auto g = symmetric_group_s3();
    const auto a = in_backend<S>(function_algebra(g), options.tolerance);
    const auto dual = build_dual(*a);
    for (const auto& h : subgroups(g)) {
      std::string label = "{";
      std::vector<S> coords(g.order(), S(0));
      for (const auto k : h) {
        coords[k] = S(1);
        label += (label.size() > 1 ? "," : "") + g.labels()[k];
      }
      label += "}";
      const auto e = make_element(a, coords);
      run_case(report, "group-like", a->name() + ":subgroup" + label + ":group_like", [&]() -> std::optional<std::string> {
        if (!is_group_like_projection(e)) return std::string("indicator is not a group-like projection");
        return std::nullopt;
      });
      run_case(report, "group-like", a->name() + ":subgroup" + label + ":fourier", [&]() -> std::optional<std::string> {
        const auto hat = fourier_group_like(e);
        if (!is_group_like_projection(as_dual_element(dual, hat))) return "F(h)=" + coords_string(hat.values);
        return std::nullopt;
      });
    }
    // A coset of {e, (01)} that is not a subgroup.
    run_case(report, "group-like", a->name() + ":coset_rejected", [&]() -> std::optional<std::string> {
      std::vector<S> coords(g.order(), S(0));
      coords[1] = S(1);
      coords[3] = S(1);
      if (is_group_like_projection(make_element(a, coords))) return std::string("coset indicator accepted");
      return std::nullopt;
    });
    run_case(report, "group-like", a->name() + ":point_masses_rejected", [&]() -> std::optional<std::string> {
      for (std::size_t k = 0; k < g.order(); ++k) {
        if (k != g.identity() && is_group_like_projection(basis_element(a, k))) return "delta_" + g.labels()[k];
      }
      return std::nullopt;
    });
  });
  return report;
}

CheckReport laurent_checks(const SuiteOptions&) {
  CheckReport report;
  run_case(report, "laurent", "fourier_basis", []() -> std::optional<std::string> {
    for (long n = -10; n <= 10; ++n) {
      if (pair_fourier(SparseElement::basis(PairSide::CZ, n)) != SparseElement::basis(PairSide::KZ, n)) {
        return "n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });
  run_case(report, "laurent", "integral_of_products", []() -> std::optional<std::string> {
    for (long m = -5; m <= 5; ++m)
      for (long n = -5; n <= 5; ++n) {
        const auto v = pair_integral(pair_mult(SparseElement::basis(PairSide::CZ, m), SparseElement::basis(PairSide::CZ, n)));
        if (v != Cyclotomic(m + n == 0 ? 1 : 0)) return "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    return std::nullopt;
  });
  report.append(laurent_pairing_identities(5, "laurent"));
  return report;
}

CheckReport padic_golden_checks(const SuiteOptions& options) {
  CheckReport report;
  for (const unsigned p : options.primes) {
    for (long n = -3; n <= 3; ++n) {
      run_case(report, "padic", "p=" + std::to_string(p) + ":n=" + std::to_string(n) + ":golden",
               [&]() -> std::optional<std::string> {
                 const auto got = padic_fourier(subgroup_indicator(p, n));
                 const auto expected = schwartz_scale(subgroup_indicator(p, -n), Cyclotomic(power(p, -n)));
                 if (got != expected) return "F(h_n)=" + to_string(got);
                 return std::nullopt;
               });
    }
  }
  return report;
}

CheckReport padic_structure_checks(const SuiteOptions& options) {
  CheckReport report;
  Rng rng = make_rng(options, 601);
  for (const unsigned p : options.primes) {
    const std::string prefix = "p=" + std::to_string(p) + ":";
    run_case(report, "padic", prefix + "haar_measure", [&]() -> std::optional<std::string> {
      for (long n = -3; n <= 3; ++n) {
        if (haar_integral(subgroup_indicator(p, n)) != Cyclotomic(power(p, -n))) return "n=" + std::to_string(n);
        const PAdic c(p, {{n - 1, p - 1}, {n - 3, 1u}});
        if (haar_integral(indicator(Ball(c, n))) != Cyclotomic(power(p, -n))) return "translated n=" + std::to_string(n);
      }
      return std::nullopt;
    });
    run_case(report, "padic", prefix + "haar_translation_invariance", [&]() -> std::optional<std::string> {
      for (int t = 0; t < 10; ++t) {
        const auto f = random_schwartz(p, rng);
        const PAdic shift(p, {{-3, 1u}, {2, p - 1}});
        SchwartzFunction::Cells moved;
        for (const auto& [c, v] : f.cells()) moved.emplace((c + shift).truncate(f.level()), v);
        if (haar_integral(SchwartzFunction(p, f.level(), moved)) != haar_integral(f)) return to_string(f);
      }
      return std::nullopt;
    });
    run_case(report, "padic", prefix + "double_transform", [&]() -> std::optional<std::string> {
      for (long n = -3; n <= 3; ++n) {
        const auto h = subgroup_indicator(p, n);
        if (padic_fourier(padic_fourier(h)) != h) return "h_" + std::to_string(n);
      }
      for (long m = -2; m <= 2; ++m) {
        const PAdic c(p, {{m - 2, 1u}, {m - 1, p - 1}});
        const Ball b(c, m);
        if (padic_fourier(padic_fourier(indicator(b))) != indicator(Ball(negate(c, m), m))) return format_ball(b);
      }
      return std::nullopt;
    });
    run_case(report, "padic", prefix + "zero_transform", [&]() -> std::optional<std::string> {
      if (!padic_fourier(SchwartzFunction(p, 0)).is_zero()) return std::string("F(0) != 0");
      return std::nullopt;
    });
  }
  return report;
}

CheckReport padic_convolution_checks(const SuiteOptions& options) {
  CheckReport report;
  std::map<unsigned, std::optional<std::string>> witness;
  std::map<unsigned, double> elapsed;
  for (const auto& [f, g] : schwartz_family(options)) {
    Stopwatch clock;
    auto& w = witness[f.prime()];
    if (!w && padic_fourier(schwartz_convolve(f, g)) != schwartz_mul(padic_fourier(f), padic_fourier(g))) {
      w = "f=" + to_string(f) + " g=" + to_string(g);
    }
    elapsed[f.prime()] += clock.elapsed_ms();
  }
  for (const auto& [p, w] : witness) report.record("padic", "p=" + std::to_string(p) + ":convolution_theorem", w, elapsed[p]);
  return report;
}

CheckReport padic_plancherel_checks(const SuiteOptions& options) {
  CheckReport report;
  std::map<unsigned, std::optional<std::string>> witness;
  std::map<unsigned, double> elapsed;
  for (const auto& [f, g] : schwartz_family(options)) {
    Stopwatch clock;
    auto& w = witness[f.prime()];
    for (const auto* x : {&f, &g}) {
      if (w) break;
      const auto hat = padic_fourier(*x);
      if (haar_integral(schwartz_mul(hat, schwartz_star(hat))) != haar_integral(schwartz_mul(*x, schwartz_star(*x)))) {
        w = "f=" + to_string(*x);
      }
    }
    elapsed[f.prime()] += clock.elapsed_ms();
  }
  for (const auto& [p, w] : witness) report.record("padic", "p=" + std::to_string(p) + ":plancherel", w, elapsed[p]);
  return report;
}

CheckReport padic_group_like_checks(const SuiteOptions& options) {
  CheckReport report;
  for (const unsigned p : options.primes) {
    report.append(padic_group_like_suite({-3, -2, -1, 0, 1, 2, 3}, p, "padic"));
    run_case(report, "padic", "p=" + std::to_string(p) + ":fixed_point", [&]() -> std::optional<std::string> {
      const auto h0 = subgroup_indicator(p, 0);
      if (padic_fourier(h0) != h0) return "F(h_0)=" + to_string(padic_fourier(h0));
      return std::nullopt;
    });
  }
  return report;
}

CheckReport riemann_oracle_checks(const SuiteOptions& options) {
  constexpr double kOracleTolerance = 1e-6;
  CheckReport report;
  Rng rng = make_rng(options, 701);
  std::map<unsigned, std::optional<std::string>> witness;
  std::map<unsigned, double> worst;
  std::map<unsigned, double> elapsed;
  for (const auto& [f, g] : schwartz_family(options)) {
    (void)g;
    Stopwatch clock;
    const unsigned p = f.prime();
    const auto hat = padic_fourier(f);
    // Points of p^{-m-1} Z_p, one level finer than the transform.
    const long low = -f.level() - 1;
    const long high = std::max(hat.level(), -f.level()) + 1;
    std::uniform_int_distribution<unsigned> digit(0, p - 1);
    for (int s = 0; s < 20; ++s) {
      std::map<long, unsigned> digits;
      for (long j = low; j < high; ++j) digits[j] = digit(rng);
      const PAdic y(p, digits);
      const auto exact = numeric_value(hat(y));
      const auto approx = oracles::riemann_fourier(f, y);
      const double err = std::hypot(exact.re - approx.real(), exact.im - approx.imag());
      worst[p] = std::max(worst[p], err);
      if (err > kOracleTolerance && !witness[p]) {
        std::ostringstream os;
        os << "f=" << to_string(f) << " y=" << format_padic(y) << " error=" << err;
        witness[p] = os.str();
      }
    }
    witness.try_emplace(p);
    elapsed[p] += clock.elapsed_ms();
  }
  for (const auto& [p, w] : witness) report.record("oracle", "p=" + std::to_string(p) + ":riemann_sum", w, elapsed[p]);
  return report;
}

CheckReport dft_oracle_checks(const SuiteOptions& options) {
  CheckReport report;
  Rng rng = make_rng(options, 801);
  for (const auto& name : kGroups) {
    const auto g = builtin_group(name);
    if (!g.is_abelian()) continue;
    const auto a = function_algebra(g);
    const auto chars = oracles::abelian_characters(g);
    run_case(report, "oracle", a->name() + ":character_sum_dft", [&]() -> std::optional<std::string> {
      for (std::size_t n = 0; n < a->dim() + options.random_elements; ++n) {
        const auto x = n < a->dim() ? basis_element(a, n) : random_element(a, rng);
        const auto expected = oracles::character_sum_dft(g, x.coords);
        const auto w = fourier(x);
        for (std::size_t k = 0; k < chars.size(); ++k) {
          // F(a) evaluated on the conjugate character function.
          std::vector<Cyclotomic> conj_chi(g.order());
          for (std::size_t t = 0; t < g.order(); ++t) conj_chi[t] = conj(oracles::character_value(g, chars[k], t));
          if (w(make_element(a, conj_chi)) != expected[k]) return "a=" + coords_string(x.coords) + " k=" + std::to_string(k);
        }
      }
      return std::nullopt;
    });
  }
  return report;
}

CheckReport run_suite(const std::string& name, const SuiteOptions& options) {
  CheckReport report;
  if (name == "all") {
    for (const auto& n : suite_names()) report.append(run_suite(n, options));
  } else if (name == "axioms") {
    for (const auto& a : finite_fixtures()) report.append(axioms_report(a->data(), options));
  } else if (name == "duality") {
    report = duality_checks(options);
  } else if (name == "inversion") {
    report = inversion_checks(options);
    report.append(lemma_checks(options));
  } else if (name == "convolution") {
    report = convolution_checks(options);
  } else if (name == "plancherel") {
    report = plancherel_checks(options);
  } else if (name == "types") {
    report = type_checks(options);
  } else if (name == "group-like") {
    report = group_like_checks(options);
  } else if (name == "laurent") {
    report = laurent_checks(options);
  } else if (name == "padic") {
    report = padic_golden_checks(options);
    report.append(padic_structure_checks(options));
    report.append(padic_convolution_checks(options));
    report.append(padic_plancherel_checks(options));
    report.append(padic_group_like_checks(options));
  } else if (name == "oracle") {
    report = riemann_oracle_checks(options);
    report.append(dft_oracle_checks(options));
  } else {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  return report;
}

CheckReport run_suites(const std::vector<std::string>& names, const SuiteOptions& options) {
  CheckReport report;
  for (const auto& n : names) report.append(run_suite(n, options));
  return report;
}

}  // namespace aqg
