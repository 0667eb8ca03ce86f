#include <gtest/gtest.h>

#include "aqg/error.hpp"
#include "aqg/padic/schwartz.hpp"

namespace aqg {
namespace {

using C = Cyclotomic;

Rational r(long n, long d = 1) { return make_rational(n, d); }

Rational ppow(long p, long e) {
  Rational out(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= p;
  return e < 0 ? Rational(1) / out : out;
}

TEST(PAdicParse, TermSums) {
  const auto x = parse_padic("1*5^-2 + 3", 5);
  EXPECT_EQ(x.digits(), (std::map<long, unsigned>{{-2, 1}, {0, 3}}));
  EXPECT_EQ(parse_padic("5^3", 5).digits(), (std::map<long, unsigned>{{3, 1}}));
  EXPECT_EQ(format_padic(parse_padic("1 + 1*2^1", 2)), "1 + 1*2^1");
  EXPECT_EQ(format_padic(parse_padic("1*2^1 + 1", 2)), "1 + 1*2^1");
  // Repeated exponents are added with carries.
  EXPECT_EQ(format_padic(parse_padic("1 + 1", 2)), "1*2^1");
}

TEST(PAdicParse, DigitStrings) {
  // 102.1 in base 3 = 9 + 2 + 1/3
  EXPECT_EQ(parse_padic("102.1", 3).value(), r(34, 3));
  EXPECT_EQ(parse_padic("0", 7).is_zero(), true);
  EXPECT_EQ(format_padic(PAdic(7)), "0");
}

TEST(PAdicParse, Errors) {
  try {
    parse_padic("7*5^0", 5);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  try {
    parse_padic("1 + 2*3^1", 5);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_padic("1 +", 5), ParseError);
  EXPECT_THROW(parse_padic("12.", 5), ParseError);
  EXPECT_THROW(parse_padic("19", 5), ParseError);
  EXPECT_THROW(parse_padic("", 5), ParseError);
  EXPECT_THROW(parse_padic("1", 6), PreconditionError);
}

TEST(PAdicParse, RoundTripIsCanonical) {
  Rng rng(1);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    std::uniform_int_distribution<unsigned> d(0, p - 1);
    for (int t = 0; t < 50; ++t) {
      std::map<long, unsigned> digits;
      for (long j = -3; j <= 3; ++j) digits[j] = d(rng);
      const PAdic x(p, digits);
      EXPECT_EQ(parse_padic(format_padic(x), p), x);
    }
  }
}

TEST(PAdicArith, Examples) {
  const PAdic one(2, {{0, 1u}});
  EXPECT_EQ((one + one).digits(), (std::map<long, unsigned>{{1, 1}}));
  const PAdic a(5, {{-1, 2u}});
  const PAdic three(5, {{0, 3u}});
  EXPECT_EQ((a * three).digits(), (std::map<long, unsigned>{{-1, 1}, {0, 1}}));
  EXPECT_EQ((a * three).value(), r(6, 5));
  EXPECT_THROW(one + three, PrimeMismatch);
}

TEST(PAdicArith, RationalOracle) {
  Rng rng(2);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    std::uniform_int_distribution<long> num(0, 500);
    std::uniform_int_distribution<long> k(0, 3);
    for (int t = 0; t < 50; ++t) {
      long den_x = 1, den_y = 1;
      for (long i = k(rng); i > 0; --i) den_x *= p;
      for (long i = k(rng); i > 0; --i) den_y *= p;
      const Rational qx = r(num(rng), den_x), qy = r(num(rng), den_y);
      const auto x = PAdic::from_rational(p, qx), y = PAdic::from_rational(p, qy);
      EXPECT_EQ(x.value(), qx);
      EXPECT_EQ((x + y).value(), qx + qy);
      EXPECT_EQ((x * y).value(), qx * qy);
      for (long m : {-2L, 0L, 3L}) {
        EXPECT_TRUE((x + negate(x, m)).truncate(m).is_zero());
        const auto neg = negate(x, m);
        for (const auto& [j, digit] : neg.digits()) EXPECT_LT(j, m);
      }
    }
  }
  EXPECT_THROW(PAdic::from_rational(5, r(1, 3)), PreconditionError);
  EXPECT_THROW(PAdic::from_rational(5, r(-1)), PreconditionError);
}

TEST(PAdicValuation, Examples) {
  for (long n = -3; n <= 3; ++n) {
    const auto vn = valuation_norm(PAdic::power(5, n));
    EXPECT_EQ(vn.valuation, n);
    EXPECT_EQ(vn.norm, ppow(5, -n));
  }
  const auto zero = valuation_norm(PAdic(5));
  EXPECT_FALSE(zero.valuation.has_value());
  EXPECT_EQ(zero.norm, r(0));
  EXPECT_EQ(valuation_norm(parse_padic("3*5^-2 + 1", 5)).norm, r(25));
}

TEST(PAdicFractional, Examples) {
  EXPECT_EQ(fractional_part(parse_padic("3*5^-2 + 2", 5)), r(3, 25));
  EXPECT_EQ(fractional_part(parse_padic("4*5^0 + 1*5^3", 5)), r(0));
  EXPECT_EQ(fractional_part(parse_padic("1*2^-1 + 1*2^-2", 2)), r(3, 4));
}

TEST(PAdicCharacter, Examples) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    EXPECT_EQ(character(PAdic::power(p, -1), PAdic::power(p, 0)), C::root_of_unity(p, 1));
    EXPECT_EQ(character(PAdic::power(p, -1), PAdic::power(p, 1)), C(1));
  }
  EXPECT_EQ(character(PAdic::power(2, -1), PAdic::power(2, 0)), C(-1));
  EXPECT_EQ(to_string(character_root(PAdic::power(2, -1), PAdic::power(2, 0))), "zeta(2)^1");
  EXPECT_THROW(character(PAdic::power(2, -1), PAdic::power(3, 0)), PrimeMismatch);
}

TEST(PAdicCharacter, Bicharacter) {
  Rng rng(3);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    std::uniform_int_distribution<unsigned> d(0, p - 1);
    auto draw = [&] {
      std::map<long, unsigned> digits;
      for (long j = -2; j <= 1; ++j) digits[j] = d(rng);
      return PAdic(p, digits);
    };
    for (int t = 0; t < 20; ++t) {
      const auto x1 = draw(), x2 = draw(), y = draw();
      EXPECT_EQ(character(x1 + x2, y), character(x1, y) * character(x2, y));
      EXPECT_EQ(character(x1, y), character(y, x1));
    }
  }
}

TEST(Ball, ParseAndFormat) {
  const auto b = parse_ball("5^1*Zp", 5);
  EXPECT_EQ(b.level, 1);
  EXPECT_TRUE(b.center.is_zero());
  const auto c = parse_ball("1*2^-1 + 1 + 2^3*Zp", 2);
  EXPECT_EQ(c.level, 3);
  EXPECT_EQ(c.center.value(), r(3, 2));
  EXPECT_EQ(parse_ball("Zp", 3).level, 0);
  EXPECT_EQ(format_ball(c), "1*2^-1 + 1 + 2^3*Zp");
  EXPECT_EQ(parse_ball(format_ball(c), 2), c);
  // The center is reduced modulo p^m.
  EXPECT_EQ(parse_ball("1 + 1*3^2 + 3^1*Zp", 3).center.value(), r(1));
  EXPECT_THROW(parse_ball("3^1", 3), ParseError);
  EXPECT_THROW(parse_ball("2*3^1*Zp", 3), ParseError);
}

TEST(Schwartz, IndicatorEvaluation) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto h = subgroup_indicator(p, 0);
    EXPECT_EQ(h(PAdic(p)), C(1));
    EXPECT_EQ(h(PAdic::power(p, -1)), C(0));
    EXPECT_EQ(h(PAdic::power(p, 4)), C(1));
  }
}

TEST(Schwartz, CanonicalizeAndRefinementEquality) {
  const SchwartzFunction two_cells(2, 1, {{PAdic(2), C(1)}, {PAdic(2, {{0, 1u}}), C(1)}});
  const auto z2 = subgroup_indicator(2, 0);
  EXPECT_EQ(two_cells, z2);
  EXPECT_EQ(canonicalize(two_cells).level(), 1);
  const auto coarse = canonicalize(two_cells, true);
  EXPECT_EQ(coarse.level(), 0);
  EXPECT_EQ(coarse.cells().size(), 1u);
  const auto sum = schwartz_add(indicator(Ball(PAdic(3, {{0, 1u}}), 1)), subgroup_indicator(3, 1));
  EXPECT_EQ(sum.cells().size(), 2u);
  EXPECT_EQ(SchwartzFunction(3, 0, {{PAdic(3), C(0)}}).is_zero(), true);
  EXPECT_THROW(SchwartzFunction(3, 0, {{PAdic::power(3, 1), C(1)}}), PreconditionError);
}

TEST(Schwartz, PointwiseOperations) {
  for (unsigned p : {2u, 3u, 5u}) {
    EXPECT_EQ(schwartz_mul(subgroup_indicator(p, 0), subgroup_indicator(p, 1)), subgroup_indicator(p, 1));
    EXPECT_TRUE(schwartz_mul(indicator(Ball(PAdic(p, {{0, 1u}}), 1)), subgroup_indicator(p, 1)).is_zero());
    for (long n = -2; n <= 2; ++n) {
      const auto h = subgroup_indicator(p, n);
      EXPECT_EQ(schwartz_mul(h, h), h);
    }
  }
  const SchwartzFunction f(5, 0, {{PAdic(5), C::root_of_unity(4, 1)}});
  EXPECT_EQ(schwartz_star(f)(PAdic(5)), C::root_of_unity(4, 3));
  EXPECT_THROW(schwartz_mul(subgroup_indicator(2, 0), subgroup_indicator(3, 0)), PrimeMismatch);
}

TEST(Haar, MeasureOfBalls) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (long n = -3; n <= 3; ++n) {
      const Rational expected = ppow(p, -n);
      EXPECT_EQ(haar_integral(subgroup_indicator(p, n)), C(expected));
      const PAdic c(p, {{n - 2, 1u}, {n - 1, p - 1}});
      EXPECT_EQ(haar_integral(indicator(Ball(c, n))), C(expected));
    }
    EXPECT_EQ(haar_integral(SchwartzFunction(p, 0)), C(0));
  }
}

TEST(Haar, LinearAndTranslationInvariant) {
  Rng rng(4);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 10; ++t) {
      const auto f = random_schwartz(p, rng), g = random_schwartz(p, rng);
      const C a = random_small_scalar(rng);
      EXPECT_EQ(haar_integral(schwartz_add(schwartz_scale(f, a), g)), a * haar_integral(f) + haar_integral(g));
      // Translate every cell by the same shift.
      const PAdic shift(p, {{-3, 1u}, {1, 1u}});
      SchwartzFunction::Cells moved;
      for (const auto& [c, v] : f.cells()) moved.emplace((c + shift).truncate(f.level()), v);
      EXPECT_EQ(haar_integral(SchwartzFunction(p, f.level(), moved)), haar_integral(f));
    }
  }
  HaarMeasure mu = HaarMeasure::normalized_for(subgroup_indicator(3, 2));
  EXPECT_EQ(mu.scale, r(9));
  EXPECT_EQ(mu.integrate(subgroup_indicator(3, 2)), C(1));
}

// (f * g)(t) = sum over s in the fine grid of f(s) g(t - s) p^{-L}.
SchwartzFunction brute_convolution(const SchwartzFunction& f, const SchwartzFunction& g) {
  const unsigned p = f.prime();
  const long level = std::max(f.level(), g.level());
  const long low = std::min(f.window().first, g.window().first);
  const auto grid = cell_representatives(p, low, level);
  const C cell(ppow(p, -level));
  SchwartzFunction::Cells out;
  for (const auto& t : grid) {
    C sum(0);
    for (const auto& s : grid) sum += f(s) * g(subtract(t, s, level));
    if (!is_zero(sum)) out.emplace(t, sum * cell);
  }
  return SchwartzFunction(p, level, out);
}

TEST(Convolution, Examples) {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto h0 = subgroup_indicator(p, 0);
    EXPECT_EQ(schwartz_convolve(h0, h0), h0);
    EXPECT_TRUE(schwartz_convolve(h0, SchwartzFunction(p, 0)).is_zero());
    for (long n = -2; n <= 2; ++n) {
      const auto h = subgroup_indicator(p, n);
      EXPECT_EQ(schwartz_convolve(h, h), schwartz_scale(h, haar_integral(h)));
    }
  }
}

TEST(Convolution, MatchesBruteForce) {
  Rng rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int t = 0; t < 6; ++t) {
      const auto f = random_schwartz(p, rng), g = random_schwartz(p, rng);
      EXPECT_EQ(schwartz_convolve(f, g), brute_convolution(f, g)) << to_string(f) << " " << to_string(g);
    }
  }
}

// F(f)(y) = sum over x in a grid fine enough for both f and chi(., y).
C brute_fourier_at(const SchwartzFunction& f, const PAdic& y) {
  const unsigned p = f.prime();
  const long level = std::max(f.level(), -y.valuation().value_or(0));
  const C cell(ppow(p, -level));
  C sum(0);
  for (const auto& x : cell_representatives(p, f.window().first, level)) {
    const C fx = f(x);
    if (!is_zero(fx)) sum += fx * character_root(x, y).conjugate().value();
  }
  return sum * cell;
}

TEST(Fourier, GoldenIdentity) {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (long n = -3; n <= 3; ++n) {
      const C scale(ppow(p, -n));
      EXPECT_EQ(padic_fourier(subgroup_indicator(p, n)), schwartz_scale(subgroup_indicator(p, -n), scale));
    }
}

TEST(Fourier, HalfShiftedBallInZ2) {
  const auto f = indicator(Ball(PAdic::power(2, -1), 0));
  const SchwartzFunction expected(2, 1, {{PAdic(2), C(1)}, {PAdic(2, {{0, 1u}}), C(-1)}});
  const auto got = padic_fourier(f);
  EXPECT_EQ(got, expected);
  for (const auto& y : cell_representatives(2, -2, 3)) EXPECT_EQ(got(y), brute_fourier_at(f, y));
  EXPECT_TRUE(padic_fourier(SchwartzFunction(2, 0)).is_zero());
}

TEST(Fourier, MatchesExactRiemannSums) {
  Rng rng(6);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int t = 0; t < 4; ++t) {
      const auto f = random_schwartz(p, rng);
      const auto hat = padic_fourier(f);
      const auto [n, m] = hat.window();
      for (const auto& y : cell_representatives(p, std::min(n, -f.level()) - 1, hat.level() + 1)) {
        EXPECT_EQ(hat(y), brute_fourier_at(f, y)) << to_string(f) << " y=" << format_padic(y);
      }
    }
  }
}

TEST(Fourier, DoubleTransformReflects) {
  for (unsigned p : {2u, 3u, 5u}) {
    for (long n = -2; n <= 2; ++n) {
      const auto h = subgroup_indicator(p, n);
      EXPECT_EQ(padic_fourier(padic_fourier(h)), h);
    }
    for (long m = -1; m <= 1; ++m) {
      const PAdic c(p, {{m - 2, 1u}, {m - 1, p - 1}});
      EXPECT_EQ(padic_fourier(padic_fourier(indicator(Ball(c, m)))), indicator(Ball(negate(c, m), m)));
    }
  }
}

TEST(Fourier, ConvolutionTheoremAndPlancherel) {
  Rng rng(7);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int t = 0; t < 3; ++t) {
      const auto f = random_schwartz(p, rng), g = random_schwartz(p, rng);
      EXPECT_EQ(padic_fourier(schwartz_convolve(f, g)), schwartz_mul(padic_fourier(f), padic_fourier(g)));
      const auto hat = padic_fourier(f);
      EXPECT_EQ(haar_integral(schwartz_mul(hat, schwartz_star(hat))), haar_integral(schwartz_mul(f, schwartz_star(f))));
    }
  }
}

TEST(GroupLike, PAdicSuite) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const auto report = padic_group_like_suite({-3, -2, -1, 0, 1, 2, 3}, p);
    EXPECT_TRUE(report.all_passed());
    EXPECT_EQ(report.records().size(), 22u);
  }
  EXPECT_EQ(padic_fourier(subgroup_indicator(3, 0)), subgroup_indicator(3, 0));
  const auto h1 = subgroup_indicator(2, 1);
  EXPECT_EQ(padic_fourier(h1, HaarMeasure::normalized_for(h1)), subgroup_indicator(2, -1));
  EXPECT_TRUE(coproduct_condition_witness(indicator(Ball(PAdic(5, {{0, 1u}}), 1))).has_value());
}

}  // namespace
}  // namespace aqg
