#include <gtest/gtest.h>

#include "aqg/examples/laurent_pair.hpp"

namespace aqg {
namespace {

using C = Cyclotomic;

SparseElement e(long n) { return SparseElement::basis(PairSide::CZ, n); }
SparseElement d(long n) { return SparseElement::basis(PairSide::KZ, n); }

TEST(Laurent, FourierSendsBasisToDelta) {
  for (long n = -10; n <= 10; ++n) EXPECT_EQ(pair_fourier(e(n)), d(n));
  EXPECT_TRUE(pair_fourier(SparseElement(PairSide::CZ)).is_zero());
}

TEST(Laurent, FourierOnKZPairsLikeTheIntegral) {
  // <F(f), g> = sum_k f(k) g(k)
  const SparseElement f(PairSide::KZ, {{-2, C(3)}, {1, C(-1)}, {4, C(2)}});
  const SparseElement g(PairSide::KZ, {{-2, C(5)}, {4, C(7)}, {9, C(1)}});
  EXPECT_EQ(pair_pairing(pair_fourier(f), g), pair_integral(pair_mult(f, g)));
  EXPECT_EQ(pair_pairing(pair_fourier(f), g), C(29));
}

TEST(Laurent, PairingEvaluatesAtMinusN) {
  const SparseElement f(PairSide::KZ, {{-3, C(1)}, {0, C(1)}, {2, C(1)}});
  EXPECT_EQ(pair_pairing(e(3), f), C(1));
  EXPECT_EQ(pair_pairing(e(-2), f), C(1));
  EXPECT_EQ(pair_pairing(e(2), f), C(0));
}

TEST(Laurent, IntegralOfProducts) {
  for (long m = -5; m <= 5; ++m)
    for (long n = -5; n <= 5; ++n) EXPECT_EQ(pair_integral(pair_mult(e(m), e(n))), C(m + n == 0 ? 1 : 0));
}

TEST(Laurent, CanonicalFormDropsZeros) {
  const SparseElement a(PairSide::CZ, {{1, C(0)}, {2, C(3)}});
  EXPECT_EQ(a.support().size(), 1u);
  EXPECT_TRUE((e(1) + C(-1) * e(1)).is_zero());
  EXPECT_THROW(e(1) + d(1), PreconditionError);
}

TEST(Laurent, SlicesOnKZ) {
  // Delta(f)(1 (x) g)(x, y) = f(x + y) g(y)
  const SparseElement f(PairSide::KZ, {{0, C(1)}, {1, C(2)}});
  const SparseElement g(PairSide::KZ, {{3, C(5)}});
  const auto right = pair_delta_slice_right(f, g);
  ASSERT_EQ(right.size(), 2u);
  EXPECT_EQ(right.at({-3, 3}), C(5));
  EXPECT_EQ(right.at({-2, 3}), C(10));
  // (g (x) 1)Delta(f)(x, y) = g(x) f(x + y)
  const auto left = pair_delta_slice_left(g, f);
  ASSERT_EQ(left.size(), 2u);
  EXPECT_EQ(left.at({3, -3}), C(5));
  EXPECT_EQ(left.at({3, -2}), C(10));
}

TEST(Laurent, SlicesOnCZ) {
  EXPECT_EQ(pair_delta_slice_right(e(2), e(5)), (SparseTensor{{{2, 7}, C(1)}}));
  EXPECT_EQ(pair_delta_slice_left(e(2), e(5)), (SparseTensor{{{7, 5}, C(1)}}));
}

TEST(Laurent, CounitAndAntipode) {
  const SparseElement f(PairSide::KZ, {{0, C(4)}, {1, C(2)}});
  EXPECT_EQ(pair_counit(f), C(4));
  EXPECT_EQ(pair_counit(e(7)), C(1));
  EXPECT_EQ(pair_antipode(e(3)), e(-3));
  EXPECT_EQ(pair_antipode(f), SparseElement(PairSide::KZ, {{0, C(4)}, {-1, C(2)}}));
}

TEST(Laurent, PairingIdentities) {
  const auto r = laurent_pairing_identities(5);
  EXPECT_EQ(r.records().size(), 3u);
  EXPECT_TRUE(r.all_passed());
}

TEST(Laurent, TypeCertificates) {
  EXPECT_EQ(classify_laurent_side(PairSide::CZ), (TypeClassification{true, false}));
  EXPECT_EQ(classify_laurent_side(PairSide::KZ), (TypeClassification{false, true}));
  const auto r = laurent_type_certificates();
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.failed(), 0u);
  EXPECT_EQ(r.records().size(), 6u);
}

TEST(Laurent, WindowDecisions) {
  EXPECT_FALSE(cz_has_cointegral_in_window(0));
  EXPECT_FALSE(cz_has_cointegral_in_window(5));
  EXPECT_FALSE(kz_has_unit_in_window(0));
  EXPECT_FALSE(kz_has_unit_in_window(5));
}

}  // namespace
}  // namespace aqg
