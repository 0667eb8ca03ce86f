#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aqg/core/quantum_group.hpp"
#include "aqg/core/report.hpp"

namespace aqg {

namespace detail {

inline std::string index_witness(std::initializer_list<std::pair<const char*, std::size_t>> idx) {
  std::string out;
  for (const auto& [name, value] : idx) {
    if (!out.empty()) out += ",";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

template <Scalar S>
std::vector<S> unit_or_empty(const FiniteQuantumGroup<S>& a) {
  return a.has_unit() ? *a.data().unit : std::vector<S>{};
}

}  // namespace detail

/// Checks every structural identity of a finite algebraic quantum group and
/// reports one record per identity. Failures carry the first offending basis
/// indices as witness.
template <Scalar S>
CheckReport verify_axioms(const FiniteQuantumGroup<S>& a, const std::string& suite = "axioms") {
  using detail::index_witness;
  const std::size_t d = a.dim();
  const auto& t = a.data();
  CheckReport report;
  const std::string prefix = a.name() + ":";

  auto run = [&](const std::string& name, auto&& body) {
    Stopwatch clock;
    std::optional<std::string> witness = body();
    report.record(suite, prefix + name, std::move(witness), clock.elapsed_ms());
  };

  run("associativity", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const auto e_i = a.basis(i), e_j = a.basis(j), e_k = a.basis(k);
          if (a.multiply(a.multiply(e_i, e_j), e_k) != a.multiply(e_i, a.multiply(e_j, e_k))) {
            return index_witness({{"i", i}, {"j", j}, {"k", k}});
          }
        }
    return std::nullopt;
  });

  run("coassociativity", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
          for (std::size_t w = 0; w < d; ++w) {
            S left(0), right(0);
            for (std::size_t j = 0; j < d; ++j) {
              if (!is_zero(t.comult(i, j, w))) left += t.comult(i, j, w) * t.comult(j, u, v);
              if (!is_zero(t.comult(i, u, j))) right += t.comult(i, u, j) * t.comult(j, v, w);
            }
            if (left != right) return index_witness({{"i", i}, {"u", u}, {"v", v}, {"w", w}});
          }
    }
    return std::nullopt;
  });

  run("counit", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < d; ++i) {
      const Matrix<S> c = a.coproduct(a.basis(i));
      const auto left = c.transpose() * t.counit;  // (eps (x) id) Delta(a_i)
      const auto right = c * t.counit;             // (id (x) eps) Delta(a_i)
      if (left != a.basis(i) || right != a.basis(i)) return index_witness({{"i", i}});
    }
    return std::nullopt;
  });

  run("comultiplication_multiplicative", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto lhs = a.coproduct(a.multiply(a.basis(i), a.basis(j)));
        const auto rhs = a.multiply_tensor(a.coproduct(a.basis(i)), a.coproduct(a.basis(j)));
        if (lhs != rhs) return index_witness({{"i", i}, {"j", j}});
      }
    return std::nullopt;
  });

  run("counit_multiplicative", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (a.counit(a.multiply(a.basis(i), a.basis(j))) != t.counit[i] * t.counit[j]) {
          return index_witness({{"i", i}, {"j", j}});
        }
      }
    return std::nullopt;
  });

  if (a.has_unit()) {
    const auto& one = *t.unit;
    run("unit", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i) {
        if (a.multiply(one, a.basis(i)) != a.basis(i) || a.multiply(a.basis(i), one) != a.basis(i)) {
          return index_witness({{"i", i}});
        }
      }
      Matrix<S> one_one(d, d);
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) one_one(p, q) = one[p] * one[q];
      if (a.coproduct(one) != one_one) return std::string("Delta(1) != 1(x)1");
      if (a.counit(one) != S(1)) return std::string("eps(1) != 1");
      return std::nullopt;
    });

    run("antipode", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i) {
        const Matrix<S> c = a.coproduct(a.basis(i));
        std::vector<S> left(d, S(0)), right(d, S(0));
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) {
            if (is_zero(c(j, k))) continue;
            left = add(left, scale(a.multiply(a.antipode(a.basis(j)), a.basis(k)), c(j, k)));
            right = add(right, scale(a.multiply(a.basis(j), a.antipode(a.basis(k))), c(j, k)));
          }
        const auto expected = scale(one, t.counit[i]);
        if (left != expected || right != expected) return index_witness({{"i", i}});
      }
      return std::nullopt;
    });

    run("left_invariance", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i) {
        // (id (x) phi) Delta(a_i) = phi(a_i) 1
        const auto lhs = a.coproduct(a.basis(i)) * t.left_integral;
        if (lhs != scale(one, t.left_integral[i])) return index_witness({{"i", i}});
      }
      return std::nullopt;
    });

    run("right_invariance", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i) {
        // (psi (x) id) Delta(a_i) = psi(a_i) 1
        const auto lhs = a.coproduct(a.basis(i)).transpose() * t.right_integral;
        if (lhs != scale(one, t.right_integral[i])) return index_witness({{"i", i}});
      }
      return std::nullopt;
    });
  } else {
    report.skip(suite, prefix + "unit", "no unit");
    report.skip(suite, prefix + "antipode", "no unit");
    report.skip(suite, prefix + "left_invariance", "no unit");
    report.skip(suite, prefix + "right_invariance", "no unit");
  }

  run("antipode_invertible", [&]() -> std::optional<std::string> {
    if (!a.antipode_inverse_matrix()) return std::string("antipode matrix is singular");
    return std::nullopt;
  });

  run("left_faithfulness", [&]() -> std::optional<std::string> {
    if (!a.gram_inverse()) return std::string("Gram matrix phi(a_i a_j) is singular");
    return std::nullopt;
  });

  run("right_faithfulness", [&]() -> std::optional<std::string> {
    if (!a.right_gram_inverse()) return std::string("Gram matrix psi(a_i a_j) is singular");
    return std::nullopt;
  });

  if (a.is_star()) {
    run("star_involution", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i) {
        if (a.star(a.star(a.basis(i))) != a.basis(i)) return index_witness({{"i", i}});
      }
      return std::nullopt;
    });
    run("star_antimultiplicative", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          const auto lhs = a.star(a.multiply(a.basis(i), a.basis(j)));
          const auto rhs = a.multiply(a.star(a.basis(j)), a.star(a.basis(i)));
          if (lhs != rhs) return index_witness({{"i", i}, {"j", j}});
        }
      return std::nullopt;
    });
    run("comultiplication_star", [&]() -> std::optional<std::string> {
      const Matrix<S>& st = *t.star;
      for (std::size_t i = 0; i < d; ++i) {
        const Matrix<S> lhs = a.coproduct(a.star(a.basis(i)));
        // (sum c_jk a_j (x) a_k)^* = sum conj(c_jk) a_j^* (x) a_k^*
        const Matrix<S> c = a.coproduct(a.basis(i));
        Matrix<S> conj_c(d, d);
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k) conj_c(j, k) = conj(c(j, k));
        const Matrix<S> rhs = st.transpose() * conj_c * st;
        if (lhs != rhs) return index_witness({{"i", i}});
      }
      return std::nullopt;
    });
    run("antipode_star", [&]() -> std::optional<std::string> {
      for (std::size_t i = 0; i < d; ++i) {
        const auto v = a.antipode(a.star(a.antipode(a.star(a.basis(i)))));
        if (v != a.basis(i)) return index_witness({{"i", i}});
      }
      return std::nullopt;
    });
  }
  return report;
}

/// Basis of the space of left integrals: (id (x) phi) Delta(a) = phi(a) 1.
template <Scalar S>
std::vector<std::vector<S>> solve_left_integrals(const QuantumGroupData<S>& t) {
  const std::size_t d = t.dim();
  if (!t.unit) throw StructureError(t.name + ": integral equations need a unit");
  // Unknown phi_k. Equation (i, j): sum_k comult(i, j, k) phi_k - unit_j phi_i = 0.
  Matrix<S> m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) m(i * d + j, k) += t.comult(i, j, k);
      m(i * d + j, i) -= (*t.unit)[j];
    }
  return nullspace(m);
}

/// Basis of the space of right integrals: (psi (x) id) Delta(a) = psi(a) 1.
template <Scalar S>
std::vector<std::vector<S>> solve_right_integrals(const QuantumGroupData<S>& t) {
  const std::size_t d = t.dim();
  if (!t.unit) throw StructureError(t.name + ": integral equations need a unit");
  Matrix<S> m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) m(i * d + k, j) += t.comult(i, j, k);
      m(i * d + k, i) -= (*t.unit)[k];
    }
  return nullspace(m);
}

}  // namespace aqg
