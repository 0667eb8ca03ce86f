#include "aqg/examples/fixtures.hpp"

#include "aqg/core/axioms.hpp"

namespace aqg {

ExactQuantumGroupPtr function_algebra(const FiniteGroupTable& g) {
  const std::size_t n = g.order();
  QuantumGroupData<Cyclotomic> t;
  t.name = "function_algebra(" + g.name() + ")";
  for (const auto& l : g.labels()) t.labels.push_back("d[" + l + "]");
  t.mult = Tensor3<Cyclotomic>(n);
  t.comult = Tensor3<Cyclotomic>(n);
  t.antipode = Matrix<Cyclotomic>(n, n);
  t.star = Matrix<Cyclotomic>::identity(n);
  t.counit = zeros<Cyclotomic>(n);
  t.counit[g.identity()] = 1;
  t.unit = std::vector<Cyclotomic>(n, Cyclotomic(1));
  t.left_integral = std::vector<Cyclotomic>(n, Cyclotomic(1));
  t.right_integral = t.left_integral;
  for (std::size_t a = 0; a < n; ++a) {
    t.mult(a, a, a) = 1;
    t.antipode(a, g.inverse(a)) = 1;
    for (std::size_t b = 0; b < n; ++b) t.comult(g.multiply(a, b), a, b) = 1;
  }
  return ExactQuantumGroup::create(std::move(t));
}

ExactQuantumGroupPtr group_algebra(const FiniteGroupTable& g) {
  const std::size_t n = g.order();
  QuantumGroupData<Cyclotomic> t;
  t.name = "group_algebra(" + g.name() + ")";
  for (const auto& l : g.labels()) t.labels.push_back("l[" + l + "]");
  t.mult = Tensor3<Cyclotomic>(n);
  t.comult = Tensor3<Cyclotomic>(n);
  t.antipode = Matrix<Cyclotomic>(n, n);
  t.star = Matrix<Cyclotomic>(n, n);
  t.counit = std::vector<Cyclotomic>(n, Cyclotomic(1));
  t.unit = unit_vector<Cyclotomic>(n, g.identity());
  t.left_integral = unit_vector<Cyclotomic>(n, g.identity());
  t.right_integral = t.left_integral;
  for (std::size_t a = 0; a < n; ++a) {
    t.comult(a, a, a) = 1;
    t.antipode(a, g.inverse(a)) = 1;
    (*t.star)(a, g.inverse(a)) = 1;
    for (std::size_t b = 0; b < n; ++b) t.mult(a, b, g.multiply(a, b)) = 1;
  }
  return ExactQuantumGroup::create(std::move(t));
}

ExactQuantumGroupPtr sweedler_fixture() {
  // Basis index a + 2b for g^a x^b.
  QuantumGroupData<Cyclotomic> t;
  t.name = "sweedler";
  t.labels = {"1", "g", "x", "gx"};
  t.mult = Tensor3<Cyclotomic>(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
          const long sign = (b * c) % 2 == 0 ? 1 : -1;
          t.mult(a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d)) = sign;
        }
  t.comult = Tensor3<Cyclotomic>(4);
  t.comult(0, 0, 0) = 1;  // Delta(1) = 1 (x) 1
  t.comult(1, 1, 1) = 1;  // Delta(g) = g (x) g
  t.comult(2, 2, 0) = 1;  // Delta(x) = x (x) 1 + g (x) x
  t.comult(2, 1, 2) = 1;
  t.comult(3, 3, 1) = 1;  // Delta(gx) = gx (x) g + 1 (x) gx
  t.comult(3, 0, 3) = 1;
  t.counit = {1, 1, 0, 0};
  t.antipode = Matrix<Cyclotomic>(4, 4);
  t.antipode(0, 0) = 1;
  t.antipode(1, 1) = 1;
  t.antipode(2, 3) = -1;  // S(x) = -gx
  t.antipode(3, 2) = 1;   // S(gx) = x
  t.unit = std::vector<Cyclotomic>{1, 0, 0, 0};

  const auto left = solve_left_integrals(t);
  const auto right = solve_right_integrals(t);
  if (left.size() != 1 || right.size() != 1) throw StructureError("sweedler: integrals are not unique");
  t.left_integral = left[0];
  t.right_integral = right[0];
  return ExactQuantumGroup::create(std::move(t));
}

}  // namespace aqg
