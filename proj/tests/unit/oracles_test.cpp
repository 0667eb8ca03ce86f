#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "aqg/core/fourier.hpp"
#include "aqg/examples/fixtures.hpp"
#include "aqg/oracles/oracles.hpp"

namespace aqg {
namespace {

TEST(AbelianCharacters, CountAndHomomorphism) {
  for (const auto& name : {"Z2", "Z3", "Z4", "Z2xZ2", "trivial"}) {
    const auto g = builtin_group(name);
    const auto chars = oracles::abelian_characters(g);
    ASSERT_EQ(chars.size(), g.order()) << name;
    EXPECT_EQ(std::set<std::vector<unsigned>>(chars.begin(), chars.end()).size(), g.order());
    for (const auto& chi : chars)
      for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y) {
          EXPECT_EQ(oracles::character_value(g, chi, g.multiply(x, y)),
                    oracles::character_value(g, chi, x) * oracles::character_value(g, chi, y));
        }
  }
}

TEST(AbelianCharacters, CyclicCaseMatchesPowersOfZeta) {
  const auto g = cyclic_group(4);
  std::set<std::vector<unsigned>> expected;
  for (unsigned k = 0; k < 4; ++k) {
    std::vector<unsigned> chi(4);
    for (unsigned x = 0; x < 4; ++x) chi[x] = (k * x) % 4;
    expected.insert(chi);
  }
  const auto chars = oracles::abelian_characters(g);
  EXPECT_EQ(std::set<std::vector<unsigned>>(chars.begin(), chars.end()), expected);
}

TEST(CharacterSumDft, Z2Values) {
  const auto g = cyclic_group(2);
  const auto hat = oracles::character_sum_dft(g, {Cyclotomic(1), Cyclotomic(0)});
  EXPECT_EQ(hat, (std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)}));
  const auto hat2 = oracles::character_sum_dft(g, {Cyclotomic(2), Cyclotomic(-1)});
  EXPECT_EQ(std::set<std::string>({to_string(hat2[0]), to_string(hat2[1])}), (std::set<std::string>{"1", "3"}));
}

TEST(CharacterSumDft, AgreesWithGramTransformOnZ4) {
  const auto g = cyclic_group(4);
  const auto a = function_algebra(g);
  const std::vector<Cyclotomic> f{Cyclotomic(1), Cyclotomic(2), Cyclotomic(0), Cyclotomic(-3)};
  const auto w = fourier(make_element(a, f));
  const auto chars = oracles::abelian_characters(g);
  const auto hat = oracles::character_sum_dft(g, f);
  for (std::size_t k = 0; k < chars.size(); ++k) {
    std::vector<Cyclotomic> conj_chi(4);
    for (std::size_t x = 0; x < 4; ++x) conj_chi[x] = conj(oracles::character_value(g, chars[k], x));
    EXPECT_EQ(w(make_element(a, conj_chi)), hat[k]);
  }
}

TEST(RiemannOracle, MatchesGoldenTransform) {
  for (const unsigned p : {2u, 3u, 5u}) {
    for (long n = -2; n <= 2; ++n) {
      const auto h = subgroup_indicator(p, n);
      for (const auto& y : cell_representatives(p, -n - 1, -n + 1)) {
        const double expected = y.truncate(-n).is_zero() ? std::pow(double(p), double(-n)) : 0.0;
        const auto got = oracles::riemann_fourier(h, y);
        EXPECT_NEAR(got.real(), expected, 1e-9);
        EXPECT_NEAR(got.imag(), 0.0, 1e-9);
      }
    }
  }
}

TEST(RiemannOracle, DetectsAWrongTransform) {
  // Shifting the ball changes the phase of the transform at |y| = p.
  const auto f = indicator(Ball(PAdic(3, {{0, 1u}}), 1));
  const auto g = indicator(Ball(PAdic(3), 1));
  const PAdic y(3, {{-1, 1u}});
  const auto exact = numeric_value(padic_fourier(g)(y));
  const auto approx = oracles::riemann_fourier(f, y);
  EXPECT_GT(std::hypot(exact.re - approx.real(), exact.im - approx.imag()), 0.1);
}

}  // namespace
}  // namespace aqg
