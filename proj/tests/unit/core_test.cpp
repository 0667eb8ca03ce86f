#include <gtest/gtest.h>

#include <random>

#include "aqg/core/axioms.hpp"
#include "aqg/core/dual.hpp"
#include "aqg/core/fourier.hpp"
#include "aqg/core/group_like.hpp"
#include "aqg/core/random.hpp"
#include "aqg/core/types.hpp"
#include "aqg/examples/fixtures.hpp"

namespace aqg {
namespace {

using C = Cyclotomic;
using Elem = Element<C>;

std::vector<ExactQuantumGroupPtr> all_fixtures() {
  std::vector<ExactQuantumGroupPtr> out;
  for (const auto& name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
    out.push_back(function_algebra(builtin_group(name)));
    out.push_back(group_algebra(builtin_group(name)));
  }
  out.push_back(function_algebra(trivial_group()));
  out.push_back(sweedler_fixture());
  return out;
}

std::string failures(const CheckReport& r) {
  std::string out;
  for (const auto& rec : r.records()) {
    if (rec.status == CheckStatus::fail) out += rec.case_name + " [" + rec.witness.value_or("") + "] ";
  }
  return out;
}

TEST(FiniteGroup, RejectsNonAssociativeTable) {
  EXPECT_THROW(FiniteGroupTable({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}, {"a", "b", "c"}, "bad"), InvalidGroupTable);
  EXPECT_THROW(FiniteGroupTable({{0, 1}, {1, 1}}, {"a", "b"}, "bad"), InvalidGroupTable);
}

TEST(FiniteGroup, SubgroupsOfS3) {
  const auto s3 = symmetric_group_s3();
  EXPECT_FALSE(s3.is_abelian());
  std::vector<std::size_t> sizes;
  for (const auto& h : subgroups(s3)) sizes.push_back(h.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 2, 3, 6}));
}

TEST(Fixtures, FunctionAlgebraZ2HandTensors) {
  const auto a = function_algebra(cyclic_group(2));
  const auto& t = a->data();
  // delta_0 delta_0 = delta_0, delta_0 delta_1 = 0.
  EXPECT_EQ(t.mult(0, 0, 0), C(1));
  EXPECT_EQ(t.mult(0, 1, 0), C(0));
  EXPECT_EQ(t.mult(0, 1, 1), C(0));
  // Delta(delta_1) = delta_0 (x) delta_1 + delta_1 (x) delta_0.
  EXPECT_EQ(t.comult(1, 0, 1), C(1));
  EXPECT_EQ(t.comult(1, 1, 0), C(1));
  EXPECT_EQ(t.comult(1, 1, 1), C(0));
  EXPECT_EQ(t.counit, (std::vector<C>{1, 0}));
  EXPECT_EQ(t.left_integral, (std::vector<C>{1, 1}));
}

TEST(Fixtures, S3FunctionAlgebraIsNotCocommutative) {
  const auto g = symmetric_group_s3();
  const auto a = function_algebra(g);
  const auto c = a->coproduct(a->basis(g.identity()));
  int terms = 0;
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t k = 0; k < 6; ++k) terms += !is_zero(c(j, k));
  EXPECT_EQ(terms, 6);
  bool cocommutative = true;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto ci = a->coproduct(a->basis(i));
    cocommutative = cocommutative && ci == ci.transpose();
  }
  EXPECT_FALSE(cocommutative);
}

TEST(Axioms, AllFixturesPass) {
  for (const auto& a : all_fixtures()) {
    const auto r = verify_axioms(*a);
    EXPECT_TRUE(r.all_passed()) << a->name() << ": " << failures(r);
    EXPECT_EQ(r.skipped(), 0u);
  }
}

TEST(Axioms, CorruptedMultiplicationFailsAssociativityWithWitness) {
  auto data = function_algebra(cyclic_group(3))->data();
  data.mult(0, 1, 1) = 1;
  const auto r = verify_axioms(*ExactQuantumGroup::create(data));
  const auto* rec = r.find(data.name + ":associativity");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->status, CheckStatus::fail);
  ASSERT_TRUE(rec->witness.has_value());
  EXPECT_NE(rec->witness->find("i="), std::string::npos);
}

TEST(Axioms, SweedlerIsNotUnimodular) {
  const auto a = sweedler_fixture();
  EXPECT_NE(a->data().left_integral, a->data().right_integral);
}

TEST(Dual, FunctionAlgebraZ2DualIsGroupAlgebra) {
  const auto g = cyclic_group(2);
  const auto dual = build_dual(*function_algebra(g));
  EXPECT_EQ(structure_difference(dual.dual->data(), group_algebra(g)->data()), std::nullopt);
}

TEST(Dual, GroupAlgebraDualMatchesFunctionAlgebra) {
  for (const auto& name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
    const auto g = builtin_group(name);
    const auto dual = build_dual(*group_algebra(g));
    // delta_g corresponds to phi(. lambda_{g^-1}).
    std::vector<std::size_t> perm(g.order());
    for (std::size_t k = 0; k < g.order(); ++k) perm[k] = g.inverse(k);
    const auto matched = change_basis(dual.dual->data(), permutation_change<C>(perm), dual.dual->data().labels);
    EXPECT_EQ(structure_difference(matched, function_algebra(g)->data()), std::nullopt) << name;
  }
}

TEST(Dual, DualOfS3GroupAlgebraIsCommutativeNotCocommutative) {
  const auto dual = build_dual(*group_algebra(symmetric_group_s3())).dual;
  const auto& t = dual->data();
  bool commutative = true, cocommutative = true;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j)
      commutative = commutative && dual->multiply(dual->basis(i), dual->basis(j)) ==
                                       dual->multiply(dual->basis(j), dual->basis(i));
    const auto c = dual->coproduct(dual->basis(i));
    cocommutative = cocommutative && c == c.transpose();
  }
  EXPECT_TRUE(commutative);
  EXPECT_FALSE(cocommutative);
  EXPECT_TRUE(verify_axioms(*dual).all_passed());
  (void)t;
}

TEST(Dual, DualsSatisfyAxioms) {
  for (const auto& a : all_fixtures()) {
    const auto dual = build_dual(*a);
    const auto r = verify_axioms(*dual.dual);
    EXPECT_TRUE(r.all_passed()) << a->name() << ": " << failures(r);
  }
}

TEST(Dual, BidualReproducesEveryFixture) {
  for (const auto& a : all_fixtures()) {
    EXPECT_EQ(structure_difference(canonical_bidual(*a), a->data()), std::nullopt) << a->name();
  }
}

TEST(Fourier, DeltaMapsToEvaluation) {
  const auto a = function_algebra(cyclic_group(2));
  const auto w = fourier(basis_element(a, 1));
  EXPECT_EQ(w.values, (std::vector<C>{0, 1}));
  EXPECT_TRUE(all_zero(fourier(make_element(a, zeros<C>(2))).values));
}

TEST(Fourier, InverseOfEvaluationInZ3) {
  const auto a = function_algebra(cyclic_group(3));
  const auto w = make_functional(a, std::vector<C>{0, 1, 0});
  EXPECT_EQ(inverse_fourier(w).coords, (std::vector<C>{0, 1, 0}));
  EXPECT_TRUE(all_zero(inverse_fourier(make_functional(a, zeros<C>(3))).coords));
}

TEST(Fourier, RoundTripOnBasisAndRandomElements) {
  Rng rng(7);
  for (const auto& a : all_fixtures()) {
    for (std::size_t i = 0; i < a->dim(); ++i) {
      const auto e = basis_element(a, i);
      EXPECT_EQ(inverse_fourier(fourier(e)).coords, e.coords);
    }
    for (int n = 0; n < 20; ++n) {
      const auto x = random_element(a, rng);
      EXPECT_EQ(inverse_fourier(fourier(x)).coords, x.coords) << a->name();
    }
  }
}

TEST(Fourier, InversionIdentityOnBasis) {
  for (const auto& a : all_fixtures()) {
    for (std::size_t i = 0; i < a->dim(); ++i) {
      EXPECT_EQ(inversion_identity_witness(basis_element(a, i)), std::nullopt) << a->name() << " i=" << i;
    }
  }
}

// Classical convolution (f*g)(t) = sum_s f(s) g(s^-1 t).
std::vector<C> classical_convolution(const FiniteGroupTable& g, const std::vector<C>& f, const std::vector<C>& h) {
  std::vector<C> out(g.order(), C(0));
  for (std::size_t t = 0; t < g.order(); ++t)
    for (std::size_t s = 0; s < g.order(); ++s) out[t] += f[s] * h[g.multiply(g.inverse(s), t)];
  return out;
}

TEST(Convolution, MatchesClassicalOnFunctionAlgebras) {
  const auto z3 = function_algebra(cyclic_group(3));
  EXPECT_EQ(convolve(basis_element(z3, 1), basis_element(z3, 1)).coords, (std::vector<C>{0, 0, 1}));
  const auto z2 = function_algebra(cyclic_group(2));
  EXPECT_EQ(convolve(basis_element(z2, 0), basis_element(z2, 0)).coords, (std::vector<C>{1, 0}));

  Rng rng(11);
  for (const auto& name : {"Z4", "Z2xZ2", "S3"}) {
    const auto g = builtin_group(name);
    const auto a = function_algebra(g);
    for (int n = 0; n < 5; ++n) {
      const auto x = random_element(a, rng), y = random_element(a, rng);
      EXPECT_EQ(convolve(x, y).coords, classical_convolution(g, x.coords, y.coords)) << name;
    }
  }
}

TEST(Convolution, TheoremAndAlternateFormulaOnBasisPairs) {
  for (const auto& a : all_fixtures()) {
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) {
        const auto x = basis_element(a, i), y = basis_element(a, j);
        const auto conv = convolve(x, y);
        EXPECT_EQ(conv.coords, convolve_alternate(x, y).coords) << a->name();
        EXPECT_EQ(fourier(conv).values, multiply(fourier(x), fourier(y)).values) << a->name() << " " << i << "," << j;
      }
  }
}

TEST(Plancherel, HandValuesAndRandomElements) {
  const auto z2 = function_algebra(cyclic_group(2));
  auto r = plancherel_check(basis_element(z2, 0));
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(phi(multiply(star(basis_element(z2, 0)), basis_element(z2, 0))), C(1));
  EXPECT_TRUE(plancherel_check(make_element(z2, zeros<C>(2))).all_passed());

  Rng rng(3);
  for (const auto& a : all_fixtures()) {
    if (!a->is_star()) {
      EXPECT_THROW(plancherel_check(basis_element(a, 0)), PreconditionError);
      continue;
    }
    for (int n = 0; n < 10; ++n) {
      const auto rep = plancherel_check(random_element(a, rng));
      EXPECT_TRUE(rep.all_passed()) << a->name() << ": " << failures(rep);
    }
  }
}

TEST(Types, CointegralsOfGroupFixtures) {
  for (const auto& name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
    const auto g = builtin_group(name);
    const auto f = find_cointegral(function_algebra(g));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].coords, unit_vector<C>(g.order(), g.identity()));
    const auto h = find_cointegral(group_algebra(g));
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].coords, std::vector<C>(g.order(), C(1)));
  }
}

TEST(Types, FiniteFixturesAreCompactAndDiscrete) {
  for (const auto& a : all_fixtures()) {
    EXPECT_EQ(classify_type(a), (TypeClassification{true, true})) << a->name();
    const auto r = dual_type_check(a);
    EXPECT_TRUE(r.all_passed()) << a->name() << ": " << failures(r);
    EXPECT_EQ(r.records().size(), 3u);
  }
}

TEST(Types, CorruptedIntegralFailsDualTypeCheck) {
  auto data = function_algebra(cyclic_group(3))->data();
  data.left_integral = {2, 1, 1};
  const auto r = dual_type_check(ExactQuantumGroup::create(data));
  EXPECT_FALSE(r.all_passed());
  const auto* rec = r.find(data.name + ":phi_is_dual_cointegral");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->status, CheckStatus::fail);
  EXPECT_TRUE(rec->witness.has_value());
}

TEST(Modular, UnimodularGroupsGiveOne) {
  for (const auto& a : {function_algebra(symmetric_group_s3()), group_algebra(cyclic_group(4))}) {
    EXPECT_EQ(modular_element(a).coords, a->require_unit());
  }
}

TEST(Modular, SweedlerModularElementIsNontrivialGrouplike) {
  const auto a = sweedler_fixture();
  const auto delta = modular_element(a);
  EXPECT_NE(delta.coords, a->require_unit());
  Matrix<C> dd(4, 4);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q) dd(p, q) = delta.coords[p] * delta.coords[q];
  EXPECT_EQ(a->coproduct(delta.coords), dd);
}

TEST(GroupLike, SubgroupIndicatorsInS3) {
  const auto g = symmetric_group_s3();
  const auto a = function_algebra(g);
  const auto dual = build_dual(*a);
  for (const auto& h : subgroups(g)) {
    std::vector<C> coords(6, C(0));
    for (auto k : h) coords[k] = 1;
    const auto e = make_element(a, coords);
    EXPECT_TRUE(is_group_like_projection(e));
    const auto hat = fourier_group_like(e);
    EXPECT_TRUE(is_group_like_projection(as_dual_element(dual, hat)));
  }
  EXPECT_TRUE(is_group_like_projection(unit_element(a)));
  for (std::size_t k = 0; k < 6; ++k) {
    if (k == g.identity()) continue;
    EXPECT_FALSE(is_group_like_projection(basis_element(a, k)));
  }
  // The coset {(01), (012)} of {e, (01)} is not a subgroup.
  std::vector<C> coset(6, C(0));
  coset[3] = 1;
  coset[1] = 1;
  EXPECT_FALSE(is_group_like_projection(make_element(a, coset)));
  EXPECT_THROW(fourier_group_like(make_element(a, coset)), PreconditionError);
}

TEST(GroupLike, Z2Examples) {
  const auto a = function_algebra(cyclic_group(2));
  const auto hat = fourier_group_like(basis_element(a, 0));
  EXPECT_EQ(hat.values, (std::vector<C>{1, 0}));
  const auto one_hat = fourier_group_like(unit_element(a));
  EXPECT_EQ(one_hat.values, (std::vector<C>{Rational(1, 2), Rational(1, 2)}));
}

TEST(Owners, MixedOwnersAreRejected) {
  const auto a = function_algebra(cyclic_group(2));
  const auto b = function_algebra(cyclic_group(2));
  EXPECT_THROW(multiply(basis_element(a, 0), basis_element(b, 0)), OwnerMismatch);
}

TEST(Backends, FloatBackendRoundTrip) {
  using A = ApproxComplex;
  Rng rng(5);
  for (const auto& exact : all_fixtures()) {
    const auto a = FiniteQuantumGroup<A>::create(convert_data<A>(exact->data()));
    EXPECT_TRUE(verify_axioms(*a).all_passed()) << a->name();
    for (int n = 0; n < 10; ++n) {
      const auto x = random_element(a, rng);
      EXPECT_EQ(inverse_fourier(fourier(x)).coords, x.coords);
    }
  }
}

}  // namespace
}  // namespace aqg
