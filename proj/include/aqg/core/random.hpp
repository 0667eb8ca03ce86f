#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aqg/core/quantum_group.hpp"
#include "aqg/scalars/scalar.hpp"

namespace aqg {

using Rng = std::mt19937_64;

/// a + b*i with a, b uniform in [-3, 3].
inline Cyclotomic random_small_scalar(Rng& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  const long re = coeff(rng);
  const long im = coeff(rng);
  return Cyclotomic(re) + Cyclotomic(im) * Cyclotomic::root_of_unity(4, 1);
}

template <Scalar S>
Element<S> random_element(const QuantumGroupPtr<S>& owner, Rng& rng, double tolerance = kDefaultTolerance) {
  std::vector<S> coords;
  coords.reserve(owner->dim());
  for (std::size_t i = 0; i < owner->dim(); ++i) coords.push_back(convert_scalar<S>(random_small_scalar(rng), tolerance));
  return {owner, std::move(coords)};
}

}  // namespace aqg
