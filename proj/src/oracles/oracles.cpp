#include "aqg/oracles/oracles.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <optional>

#include "aqg/error.hpp"

namespace aqg::oracles {

namespace {

std::size_t element_order(const FiniteGroupTable& g, std::size_t x) {
  std::size_t k = 1;
  for (std::size_t y = x; y != g.identity(); y = g.multiply(y, x)) ++k;
  return k;
}

// Exponents of the character sending generator i to zeta_n^{images[i]}, if consistent.
std::optional<std::vector<unsigned>> extend(const FiniteGroupTable& g, const std::vector<std::size_t>& gens,
                                            const std::vector<unsigned>& images) {
  const std::size_t n = g.order();
  std::vector<std::optional<unsigned>> chi(n);
  chi[g.identity()] = 0;
  std::deque<std::size_t> queue{g.identity()};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t y = g.multiply(x, gens[i]);
      const unsigned value = static_cast<unsigned>((*chi[x] + images[i]) % n);
      if (!chi[y]) {
        chi[y] = value;
        queue.push_back(y);
      } else if (*chi[y] != value) {
        return std::nullopt;
      }
    }
  }
  std::vector<unsigned> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!chi[x]) return std::nullopt;
    out[x] = *chi[x];
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (out[g.multiply(a, b)] != (out[a] + out[b]) % n) return std::nullopt;
    }
  return out;
}

}  // namespace

std::vector<std::vector<unsigned>> abelian_characters(const FiniteGroupTable& g) {
  if (!g.is_abelian()) throw PreconditionError(g.name() + " is not abelian");
  const std::size_t n = g.order();
  // Greedy generating set.
  std::vector<std::size_t> gens;
  std::vector<bool> reached(n, false);
  reached[g.identity()] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (!reached[a]) continue;
        for (const auto s : gens) {
          const std::size_t b = g.multiply(a, s);
          if (!reached[b]) reached[b] = grew = true;
        }
      }
    }
  }
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> images(gens.size(), 0);
  // Odometer over images in multiples of n / ord(generator).
  for (;;) {
    if (auto chi = extend(g, gens, images)) out.push_back(*chi);
    std::size_t i = 0;
    for (; i < gens.size(); ++i) {
      const unsigned step = static_cast<unsigned>(n / element_order(g, gens[i]));
      images[i] += step;
      if (images[i] < n) break;
      images[i] = 0;
    }
    if (i == gens.size()) break;
  }
  if (out.size() != n) throw StructureError("character search found " + std::to_string(out.size()) + " characters");
  return out;
}

Cyclotomic character_value(const FiniteGroupTable& g, const std::vector<unsigned>& chi, std::size_t x) {
  return Cyclotomic::root_of_unity(static_cast<unsigned>(g.order()), chi[x]);
}

std::vector<Cyclotomic> character_sum_dft(const FiniteGroupTable& g, const std::vector<Cyclotomic>& f) {
  const auto chars = abelian_characters(g);
  std::vector<Cyclotomic> out;
  for (const auto& chi : chars) {
    Cyclotomic sum(0);
    for (std::size_t x = 0; x < g.order(); ++x) sum += f[x] * conj(character_value(g, chi, x));
    out.push_back(sum);
  }
  return out;
}

std::complex<double> riemann_fourier(const SchwartzFunction& f, const PAdic& y) {
  const unsigned p = f.prime();
  const long level = std::max(f.level(), -y.valuation().value_or(0)) + 2;
  const auto offsets = cell_representatives(p, f.level(), level);
  const double cell = std::pow(static_cast<double>(p), static_cast<double>(-level));
  const Rational yv = y.value();
  std::complex<double> sum = 0;
  for (const auto& [c, v] : f.cells()) {
    const ApproxComplex fv = numeric_value(v);
    const std::complex<double> value(fv.re, fv.im);
    for (const auto& off : offsets) {
      Rational xy = (c.value() + off.value()) * yv;
      xy -= Rational(Integer(xy.get_num() / xy.get_den()));
      const double angle = -2.0 * std::numbers::pi * xy.get_d();
      sum += value * std::complex<double>(std::cos(angle), std::sin(angle));
    }
  }
  return sum * cell;
}

}  // namespace aqg::oracles
