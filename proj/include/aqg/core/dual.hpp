#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aqg/core/quantum_group.hpp"

namespace aqg {

/// The dual quantum group in the basis w_i = phi(. a_i), together with the
/// pairing P(i, j) = <a_i, w_j> = phi(a_i a_j).
template <Scalar S>
struct DualResult {
  QuantumGroupPtr<S> dual;
  Matrix<S> pairing;
};

/// Builds the dual: the product of functionals is dual to Delta, the
/// coproduct is dual to the product, eps^(w) = w(1), S^(w) = w o S, and
/// w^*(a) = conj(w(S(a)^*)). The dual integrals are psi^(phi(. a)) = eps(a)
/// and phi^(psi(a .)) = eps(a).
template <Scalar S>
DualResult<S> build_dual(const FiniteQuantumGroup<S>& a) {
  const std::size_t d = a.dim();
  const auto& t = a.data();
  const Matrix<S>& p = a.gram();
  const Matrix<S>& pinv = a.require_gram_inverse();
  const Matrix<S>& qinv = a.require_right_gram_inverse();
  const auto& one = a.require_unit();

  QuantumGroupData<S> out;
  out.name = "dual(" + a.name() + ")";
  for (const auto& l : t.labels) out.labels.push_back("F(" + l + ")");

  // Value of w_i on a_l is p(l, i).
  out.mult = Tensor3<S>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<S> values(d, S(0));
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          for (std::size_t m = 0; m < d; ++m) {
            if (!is_zero(t.comult(k, l, m))) values[k] += t.comult(k, l, m) * p(l, i) * p(m, j);
          }
      const auto coords = pinv * values;
      for (std::size_t r = 0; r < d; ++r) out.mult(i, j, r) = coords[r];
    }

  out.comult = Tensor3<S>(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix<S> values(d, d);  // w_i(a_k a_l)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m) {
          if (!is_zero(t.mult(k, l, m))) values(k, l) += t.mult(k, l, m) * p(m, i);
        }
    const Matrix<S> coords = pinv * values * pinv.transpose();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) out.comult(i, r, s) = coords(r, s);
  }

  out.counit = p.transpose() * one;  // w_i(1) = sum_k one_k p(k, i)

  out.antipode = Matrix<S>(d, d);
  const Matrix<S> antipode_values = t.antipode * p;  // (k, i) -> w_i(S(a_k))
  for (std::size_t i = 0; i < d; ++i) {
    const auto coords = pinv * antipode_values.col(i);
    for (std::size_t r = 0; r < d; ++r) out.antipode(i, r) = coords[r];
  }

  if (a.is_star()) {
    out.star = Matrix<S>(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<S> values(d, S(0));
      for (std::size_t k = 0; k < d; ++k) {
        const auto x = a.star(a.antipode(a.basis(k)));
        values[k] = conj(dot(x, p.col(i)));
      }
      const auto coords = pinv * values;
      for (std::size_t r = 0; r < d; ++r) (*out.star)(i, r) = coords[r];
    }
  }

  out.unit = pinv * t.counit;
  out.right_integral = t.counit;
  // w_i = psi(b .) with sum_l b_l psi(a_l a_k) = p(k, i), i.e. Q^T b = p(:, i).
  out.left_integral.assign(d, S(0));
  const Matrix<S> qinv_t = qinv.transpose();
  for (std::size_t i = 0; i < d; ++i) {
    const auto b = qinv_t * p.col(i);
    out.left_integral[i] = dot(t.counit, b);
  }

  return {FiniteQuantumGroup<S>::create(std::move(out)), p};
}

/// Coordinates, in the dual basis w_i = phi(. a_i), of a functional given by its values.
template <Scalar S>
std::vector<S> dual_coordinates(const FiniteQuantumGroup<S>& a, const std::vector<S>& values) {
  return a.require_gram_inverse() * values;
}

/// Values on the basis a_k of the functional with dual coordinates c.
template <Scalar S>
std::vector<S> functional_values(const FiniteQuantumGroup<S>& a, const std::vector<S>& dual_coords) {
  return a.gram() * dual_coords;
}

/// The double dual re-expressed through the evaluation map a -> (w -> w(a)).
/// The result should reproduce the structure tensors of `a` exactly.
template <Scalar S>
QuantumGroupData<S> canonical_bidual(const FiniteQuantumGroup<S>& a) {
  const auto first = build_dual(a);
  const auto second = build_dual(*first.dual);
  const std::size_t d = a.dim();
  // ev_{a_k}(w_j) = p(k, j); coordinates in the double-dual basis: Phat^{-1} p(k, :).
  const Matrix<S>& phat_inv = first.dual->require_gram_inverse();
  Matrix<S> change(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto coords = phat_inv * first.pairing.row(k);
    for (std::size_t i = 0; i < d; ++i) change(k, i) = coords[i];
  }
  auto out = change_basis(second.dual->data(), change, a.data().labels);
  out.name = "bidual(" + a.name() + ")";
  return out;
}

}  // namespace aqg
