#pragma once

#include <complex>
#include <vector>

#include "aqg/examples/finite_group.hpp"
#include "aqg/padic/schwartz.hpp"
#include "aqg/scalars/cyclotomic.hpp"

namespace aqg::oracles {

/// All characters of a finite abelian group, found by search over generator
/// images: chi_k(g) = zeta_n^{table[k][g]} with n = |G|.
std::vector<std::vector<unsigned>> abelian_characters(const FiniteGroupTable& g);

/// Character value as an element of Q(zeta_n).
Cyclotomic character_value(const FiniteGroupTable& g, const std::vector<unsigned>& chi, std::size_t x);

/// hat f(chi_k) = sum_g f(g) conj(chi_k(g)), one entry per character.
std::vector<Cyclotomic> character_sum_dft(const FiniteGroupTable& g, const std::vector<Cyclotomic>& f);

/// Riemann sum for int f(x) exp(-2 pi i x y) dx over one sample point per
/// cell at level max(m, -v(y)) + 2, evaluated in double precision.
std::complex<double> riemann_fourier(const SchwartzFunction& f, const PAdic& y);

}  // namespace aqg::oracles
