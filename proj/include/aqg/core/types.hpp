#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aqg/core/dual.hpp"
#include "aqg/core/fourier.hpp"
#include "aqg/core/quantum_group.hpp"
#include "aqg/core/report.hpp"

namespace aqg {

/// Basis of the left cointegrals {h : a_i h = eps(a_i) h for all i}.
template <Scalar S>
std::vector<Element<S>> find_cointegral(const QuantumGroupPtr<S>& a) {
  const std::size_t d = a->dim();
  const auto& t = a->data();
  // Row (i, k): sum_l mult(i, l, k) h_l - eps_i h_k = 0.
  Matrix<S> m(d * d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = 0; l < d; ++l) m(i * d + k, l) += t.mult(i, l, k);
      m(i * d + k, k) -= t.counit[i];
    }
  std::vector<Element<S>> out;
  for (auto& v : nullspace(m)) out.push_back({a, std::move(v)});
  return out;
}

struct TypeClassification {
  bool compact = false;
  bool discrete = false;
  friend bool operator==(const TypeClassification&, const TypeClassification&) = default;
};

/// compact: a unit is present and acts as the identity; discrete: a nonzero cointegral exists.
template <Scalar S>
TypeClassification classify_type(const QuantumGroupPtr<S>& a) {
  TypeClassification out;
  if (a->has_unit()) {
    const auto& one = *a->data().unit;
    out.compact = true;
    for (std::size_t i = 0; i < a->dim() && out.compact; ++i) {
      out.compact = a->multiply(one, a->basis(i)) == a->basis(i) && a->multiply(a->basis(i), one) == a->basis(i);
    }
  }
  out.discrete = !find_cointegral(a).empty();
  return out;
}

/// For compact A: phi, viewed in the dual, satisfies w phi = eps^(w) phi for
/// every dual basis w. If A has a cointegral: eps is the unit of the dual.
template <Scalar S>
CheckReport dual_type_check(const QuantumGroupPtr<S>& a, const std::string& suite = "types") {
  if (!a->has_unit()) throw PreconditionError(a->name() + ": dual_type_check needs a compact (unital) quantum group");
  CheckReport report;
  const std::size_t d = a->dim();
  const Functional<S> phi_fn{a, a->data().left_integral};
  const Functional<S> eps_fn{a, a->data().counit};

  Stopwatch clock;
  std::optional<std::string> witness;
  for (std::size_t i = 0; i < d && !witness; ++i) {
    const auto w = fourier(basis_element(a, i));
    const auto lhs = multiply(w, phi_fn);
    const auto rhs = scale(phi_fn.values, dual_counit(w));
    if (lhs.values != rhs) witness = "w=F(" + a->data().labels[i] + ")";
  }
  report.record(suite, a->name() + ":phi_is_dual_cointegral", witness, clock.elapsed_ms());

  Stopwatch clock2;
  witness.reset();
  const auto dual = build_dual(*a);
  const auto cointegrals = find_cointegral(dual.dual);
  const auto phi_coords = dual_coordinates(*a, phi_fn.values);
  if (cointegrals.size() != 1) {
    witness = "dual cointegral space has dimension " + std::to_string(cointegrals.size());
  } else {
    // phi must be proportional to the spanning cointegral.
    Matrix<S> pair(d, 2);
    for (std::size_t k = 0; k < d; ++k) {
      pair(k, 0) = cointegrals[0].coords[k];
      pair(k, 1) = phi_coords[k];
    }
    if (rank(pair) != 1) witness = "phi not in the dual cointegral span";
  }
  report.record(suite, a->name() + ":dual_cointegral_span", witness, clock2.elapsed_ms());

  if (!find_cointegral(a).empty()) {
    Stopwatch clock3;
    witness.reset();
    for (std::size_t i = 0; i < d && !witness; ++i) {
      const auto w = fourier(basis_element(a, i));
      if (multiply(eps_fn, w).values != w.values || multiply(w, eps_fn).values != w.values) {
        witness = "w=F(" + a->data().labels[i] + ")";
      }
    }
    report.record(suite, a->name() + ":eps_is_dual_unit", witness, clock3.elapsed_ms());
  }
  return report;
}

/// The unique invertible delta with (phi (x) id) Delta(a) = phi(a) delta.
template <Scalar S>
Element<S> modular_element(const QuantumGroupPtr<S>& a) {
  const std::size_t d = a->dim();
  const auto& t = a->data();
  Matrix<S> m(d * d, d);
  std::vector<S> rhs(d * d, S(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      m(i * d + k, k) = t.left_integral[i];
      for (std::size_t j = 0; j < d; ++j) {
        if (!is_zero(t.comult(i, j, k))) rhs[i * d + k] += t.left_integral[j] * t.comult(i, j, k);
      }
    }
  auto sol = solve_general(m, rhs);
  if (!sol || !sol->unique) throw StructureError(a->name() + ": no unique modular element");
  Matrix<S> left_mult(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = a->multiply(sol->solution, a->basis(j));
    for (std::size_t k = 0; k < d; ++k) left_mult(k, j) = col[k];
  }
  if (!inverse(left_mult)) throw StructureError(a->name() + ": modular element is not invertible");
  return {a, std::move(sol->solution)};
}

}  // namespace aqg
