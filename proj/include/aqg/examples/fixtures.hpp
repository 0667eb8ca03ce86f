#pragma once

#include "aqg/core/quantum_group.hpp"
#include "aqg/examples/finite_group.hpp"
#include "aqg/scalars/cyclotomic.hpp"

namespace aqg {

using ExactQuantumGroup = FiniteQuantumGroup<Cyclotomic>;
using ExactQuantumGroupPtr = QuantumGroupPtr<Cyclotomic>;

/// Functions on G: basis delta_g, pointwise product,
/// Delta(delta_g) = sum_{hk=g} delta_h (x) delta_k, phi = psi = counting sum.
ExactQuantumGroupPtr function_algebra(const FiniteGroupTable& g);

/// Group algebra CG: basis lambda_g, lambda_g lambda_h = lambda_gh,
/// Delta(lambda_g) = lambda_g (x) lambda_g, lambda_g^* = lambda_{g^-1},
/// phi(lambda_g) = psi(lambda_g) = [g = e].
ExactQuantumGroupPtr group_algebra(const FiniteGroupTable& g);

/// Sweedler's 4-dimensional Hopf algebra with basis 1, g, x, gx:
/// g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
/// Non-unimodular: the integrals differ and the modular element is not 1.
/// The integrals are obtained by solving the invariance equations.
ExactQuantumGroupPtr sweedler_fixture();

}  // namespace aqg
