#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aqg/core/dual.hpp"
#include "aqg/core/quantum_group.hpp"
#include "aqg/core/report.hpp"

namespace aqg {

/// F(a) = phi(. a), optionally with phi rescaled by `phi_scale`.
template <Scalar S>
Functional<S> fourier(const Element<S>& a, const S& phi_scale = S(1)) {
  auto values = a.owner->gram() * a.coords;
  if (phi_scale != S(1)) values = scale(std::move(values), phi_scale);
  return {a.owner, std::move(values)};
}

/// The unique a with F(a) = omega, by exact solve against the Gram matrix.
template <Scalar S>
Element<S> inverse_fourier(const Functional<S>& omega, const S& phi_scale = S(1)) {
  auto coords = omega.owner->require_gram_inverse() * omega.values;
  if (phi_scale != S(1)) coords = scale(std::move(coords), S(1) / phi_scale);
  return {omega.owner, std::move(coords)};
}

/// (w w')(x) = (w (x) w')(Delta x): the product of the dual algebra.
template <Scalar S>
Functional<S> multiply(const Functional<S>& w, const Functional<S>& v) {
  require_same_owner(w.owner, v.owner);
  const std::size_t d = w.owner->dim();
  const auto& c = w.owner->data().comult;
  std::vector<S> values(d, S(0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      if (is_zero(w.values[l])) continue;
      for (std::size_t m = 0; m < d; ++m) {
        if (!is_zero(c(k, l, m)) && !is_zero(v.values[m])) values[k] += c(k, l, m) * w.values[l] * v.values[m];
      }
    }
  return {w.owner, std::move(values)};
}

/// w^*(x) = conj(w(S(x)^*)).
template <Scalar S>
Functional<S> star(const Functional<S>& w) {
  const auto& a = *w.owner;
  std::vector<S> values(a.dim(), S(0));
  for (std::size_t k = 0; k < a.dim(); ++k) values[k] = conj(dot(w.values, a.star(a.antipode(a.basis(k)))));
  return {w.owner, std::move(values)};
}

/// Right integral of the dual: psi^(phi(. a)) = eps(a).
template <Scalar S>
S dual_right_integral(const Functional<S>& w) {
  return counit(inverse_fourier(w));
}

/// Left integral of the dual: phi^(psi(a .)) = eps(a).
template <Scalar S>
S dual_left_integral(const Functional<S>& w) {
  const auto& a = *w.owner;
  const auto b = a.require_right_gram_inverse().transpose() * w.values;
  return a.counit(b);
}

/// Dual counit eps^(w) = w(1).
template <Scalar S>
S dual_counit(const Functional<S>& w) {
  return dot(w.values, w.owner->require_unit());
}

/// a * b = phi(S^{-1}(b_(1)) a) b_(2).
template <Scalar S>
Element<S> convolve(const Element<S>& a, const Element<S>& b) {
  require_same_owner(a.owner, b.owner);
  const auto& g = *a.owner;
  const std::size_t d = g.dim();
  const Matrix<S> cb = g.coproduct(b.coords);
  std::vector<S> out(d, S(0));
  for (std::size_t j = 0; j < d; ++j) {
    bool row_zero = true;
    for (std::size_t k = 0; k < d && row_zero; ++k) row_zero = is_zero(cb(j, k));
    if (row_zero) continue;
    const S weight = g.phi(g.multiply(g.antipode_inverse(g.basis(j)), a.coords));
    if (is_zero(weight)) continue;
    for (std::size_t k = 0; k < d; ++k) {
      if (!is_zero(cb(j, k))) out[k] += weight * cb(j, k);
    }
  }
  return {a.owner, std::move(out)};
}

/// The same convolution written as a * b = phi(S^{-1}(b) a_(2)) a_(1).
template <Scalar S>
Element<S> convolve_alternate(const Element<S>& a, const Element<S>& b) {
  require_same_owner(a.owner, b.owner);
  const auto& g = *a.owner;
  const std::size_t d = g.dim();
  const Matrix<S> ca = g.coproduct(a.coords);
  const auto sb = g.antipode_inverse(b.coords);
  std::vector<S> out(d, S(0));
  for (std::size_t k = 0; k < d; ++k) {
    bool col_zero = true;
    for (std::size_t j = 0; j < d && col_zero; ++j) col_zero = is_zero(ca(j, k));
    if (col_zero) continue;
    const S weight = g.phi(g.multiply(sb, g.basis(k)));
    if (is_zero(weight)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!is_zero(ca(j, k))) out[j] += weight * ca(j, k);
    }
  }
  return {a.owner, std::move(out)};
}

/// psi^(w' F(a)) == w'(S^{-1}(a)) for every dual basis w' and the given a.
/// Returns the first failing basis index as witness.
template <Scalar S>
std::optional<std::string> inversion_identity_witness(const Element<S>& a) {
  const auto& g = *a.owner;
  const auto fa = fourier(a);
  const auto s_inv_a = antipode_inverse(a);
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const auto wj = fourier(basis_element(a.owner, j));
    if (dual_right_integral(multiply(wj, fa)) != wj(s_inv_a)) return "w'=F(" + g.data().labels[j] + ")";
  }
  return std::nullopt;
}

/// psi^(w^* w) = phi(a^* a) for w = F(a), plus the numeric positivity of phi(a^* a).
template <Scalar S>
CheckReport plancherel_check(const Element<S>& a, double tolerance = kDefaultTolerance,
                             const std::string& suite = "plancherel", const std::string& case_name = "") {
  const auto& g = *a.owner;
  if (!g.is_star()) throw PreconditionError(g.name() + ": Plancherel needs a *-structure");
  CheckReport report;
  const std::string name = case_name.empty() ? g.name() : case_name;
  Stopwatch clock;
  const auto w = fourier(a);
  const S lhs = dual_right_integral(multiply(star(w), w));
  const S rhs = phi(multiply(star(a), a));
  if (lhs != rhs) {
    report.fail(suite, name + ":identity", "lhs=" + to_string(lhs) + " rhs=" + to_string(rhs), clock.elapsed_ms());
  } else {
    report.pass(suite, name + ":identity", clock.elapsed_ms());
  }
  const double re = numeric_real(rhs);
  if (re < -tolerance) {
    report.fail(suite, name + ":positivity", "Re phi(a*a)=" + std::to_string(re));
  } else {
    report.pass(suite, name + ":positivity");
  }
  return report;
}

}  // namespace aqg
