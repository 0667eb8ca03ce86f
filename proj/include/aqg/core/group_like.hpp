#pragma once

#include <cstddef>
#include <vector>

#include "aqg/core/dual.hpp"
#include "aqg/core/fourier.hpp"
#include "aqg/core/quantum_group.hpp"

namespace aqg {

/// h != 0, h^2 = h = h^*, and Delta(h)(1 (x) h) = h (x) h.
template <Scalar S>
bool is_group_like_projection(const Element<S>& h) {
  const auto& a = *h.owner;
  if (!a.is_star()) throw PreconditionError(a.name() + ": group-like projections need a *-structure");
  if (all_zero(h.coords)) return false;
  if (a.multiply(h.coords, h.coords) != h.coords) return false;
  if (a.star(h.coords) != h.coords) return false;
  const std::size_t d = a.dim();
  const auto& one = a.require_unit();
  Matrix<S> one_h(d, d), h_h(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      one_h(p, q) = one[p] * h.coords[q];
      h_h(p, q) = h.coords[p] * h.coords[q];
    }
  return a.multiply_tensor(a.coproduct(h.coords), one_h) == h_h;
}

/// A functional on A viewed as an element of the dual quantum group.
template <Scalar S>
Element<S> as_dual_element(const DualResult<S>& dual, const Functional<S>& w) {
  return {dual.dual, dual_coordinates(*w.owner, w.values)};
}

/// h^ = phi'(. h) with phi' = phi / phi(h); verified to be a group-like
/// projection of the dual before it is returned.
template <Scalar S>
Functional<S> fourier_group_like(const Element<S>& h) {
  if (!is_group_like_projection(h)) throw PreconditionError("input is not a group-like projection");
  const S phi_h = phi(h);
  if (is_zero(phi_h)) throw StructureError("phi(h) vanishes for a group-like projection");
  auto transform = fourier(h, S(1) / phi_h);
  const auto dual = build_dual(*h.owner);
  if (!is_group_like_projection(as_dual_element(dual, transform))) {
    throw StructureError("Fourier transform of a group-like projection is not group-like in the dual");
  }
  return transform;
}

}  // namespace aqg
