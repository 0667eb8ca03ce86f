#include "aqg/scalars/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "aqg/error.hpp"

namespace aqg {

namespace {

struct ReductionData {
  std::vector<long long> dense;  // Phi_N, lowest degree first, monic
  unsigned degree = 0;
  std::vector<std::pair<unsigned, long long>> lower;  // nonzero coefficients below the leading term
};

std::vector<long long> divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic; the division is exact.
  const std::size_t dd = den.size() - 1;
  std::vector<long long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long long c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  return quot;
}

class PolynomialCache {
 public:
  const ReductionData& get(unsigned n) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return *it->second;
    }
    auto data = std::make_unique<ReductionData>(compute(n));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(n, std::move(data));
    return *it->second;
  }

 private:
  ReductionData compute(unsigned n) {
    std::vector<long long> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
      if (n % d == 0) poly = divide_exact(std::move(poly), get(d).dense);
    }
    ReductionData out;
    out.degree = static_cast<unsigned>(poly.size() - 1);
    for (unsigned k = 0; k < out.degree; ++k) {
      if (poly[k] != 0) out.lower.emplace_back(k, poly[k]);
    }
    out.dense = std::move(poly);
    return out;
  }

  std::mutex mutex_;
  std::unordered_map<unsigned, std::unique_ptr<ReductionData>> cache_;
};

PolynomialCache& polynomial_cache() {
  static PolynomialCache cache;
  return cache;
}

using Accumulator = std::map<unsigned long, Rational>;

void accumulate(Accumulator& acc, unsigned long exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

/// Reduces an accumulator of exponents (all < N) modulo Phi_N.
std::vector<Cyclotomic::Term> reduce(unsigned order, Accumulator acc) {
  const ReductionData& phi = polynomial_cache().get(order);
  const unsigned deg = phi.degree;
  while (!acc.empty() && acc.rbegin()->first >= deg) {
    auto top = std::prev(acc.end());
    const unsigned long e = top->first;
    const Rational c = top->second;
    acc.erase(top);
    for (const auto& [k, a] : phi.lower) accumulate(acc, e - deg + k, -c * static_cast<long>(a));
  }
  std::vector<Cyclotomic::Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) terms.push_back({static_cast<unsigned>(e), std::move(c)});
  return terms;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  return polynomial_cache().get(order).dense;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) terms_.push_back({0, Rational(value)});
}

Cyclotomic::Cyclotomic(const Rational& value) {
  if (value != 0) terms_.push_back({0, value});
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long exponent) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  long e = exponent % static_cast<long>(order);
  if (e < 0) e += order;
  Accumulator acc;
  acc.emplace(static_cast<unsigned long>(e), Rational(1));
  return Cyclotomic(order, reduce(order, std::move(acc)));
}

Cyclotomic Cyclotomic::from_coefficients(unsigned order, std::span<const Rational> coeffs) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  if (coeffs.size() != euler_phi(order)) {
    throw PreconditionError("expected " + std::to_string(euler_phi(order)) + " coefficients for order " +
                            std::to_string(order) + ", got " + std::to_string(coeffs.size()));
  }
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) terms.push_back({static_cast<unsigned>(k), coeffs[k]});
  }
  return Cyclotomic(order, std::move(terms));
}

Cyclotomic Cyclotomic::from_polynomial(unsigned order, std::span<const Rational> poly) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  Accumulator acc;
  for (std::size_t k = 0; k < poly.size(); ++k) accumulate(acc, k % order, poly[k]);
  return Cyclotomic(order, reduce(order, std::move(acc)));
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> dense(degree());
  for (const auto& t : terms_) dense[t.exponent] = t.coeff;
  return dense;
}

std::optional<Rational> Cyclotomic::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].exponent == 0) return terms_[0].coeff;
  return std::nullopt;
}

Cyclotomic Cyclotomic::at_order(unsigned multiple) const {
  if (multiple == order_) return *this;
  if (multiple == 0 || multiple % order_ != 0) {
    throw PreconditionError("order " + std::to_string(multiple) + " is not a multiple of " + std::to_string(order_));
  }
  const unsigned long scale = multiple / order_;
  Accumulator acc;
  for (const auto& t : terms_) accumulate(acc, (t.exponent * scale) % multiple, t.coeff);
  return Cyclotomic(multiple, reduce(multiple, std::move(acc)));
}

std::pair<Cyclotomic, Cyclotomic> unify_order(const Cyclotomic& a, const Cyclotomic& b) {
  const unsigned m = lcm_order(a.order(), b.order());
  return {a.at_order(m), b.at_order(m)};
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && order_ == 1) return *this = o;
  const unsigned m = lcm_order(order_, o.order_);
  Cyclotomic lhs = at_order(m);
  Cyclotomic rhs = o.at_order(m);
  std::vector<Term> merged;
  merged.reserve(lhs.terms_.size() + rhs.terms_.size());
  auto i = lhs.terms_.begin();
  auto j = rhs.terms_.begin();
  while (i != lhs.terms_.end() || j != rhs.terms_.end()) {
    if (j == rhs.terms_.end() || (i != lhs.terms_.end() && i->exponent < j->exponent)) {
      merged.push_back(std::move(*i++));
    } else if (i == lhs.terms_.end() || j->exponent < i->exponent) {
      merged.push_back(std::move(*j++));
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) merged.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  order_ = m;
  terms_ = std::move(merged);
  return *this;
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  const unsigned m = lcm_order(a.order_, b.order_);
  if (auto r = a.rational_value()) {
    Cyclotomic out = b.at_order(m);
    for (auto& t : out.terms_) t.coeff *= *r;
    return out;
  }
  if (auto r = b.rational_value()) {
    Cyclotomic out = a.at_order(m);
    for (auto& t : out.terms_) t.coeff *= *r;
    return out;
  }
  const Cyclotomic lhs = a.at_order(m);
  const Cyclotomic rhs = b.at_order(m);
  Accumulator acc;
  for (const auto& s : lhs.terms_) {
    for (const auto& t : rhs.terms_) {
      accumulate(acc, (static_cast<unsigned long>(s.exponent) + t.exponent) % m, s.coeff * t.coeff);
    }
  }
  return Cyclotomic(m, reduce(m, std::move(acc)));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto [x, y] = unify_order(a, b);
  return x.terms_ == y.terms_;
}

namespace {

// Solves M x = e_0 over Q for an integer matrix with fraction-free
// (Bareiss) forward elimination and exact back substitution. Returns
// nullopt when M is singular. Pivot: first nonzero entry in row order.
std::optional<std::vector<Rational>> solve_unit_column(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(i == 0 ? Integer(1) : Integer(0));
  Integer prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) std::swap(m[pivot], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

}  // namespace

std::optional<Cyclotomic> Cyclotomic::try_inverse() const {
  if (is_zero()) return std::nullopt;
  if (terms_.size() == 1) {
    const Term& t = terms_[0];
    Cyclotomic root = root_of_unity(order_, -static_cast<long>(t.exponent));
    for (auto& s : root.terms_) s.coeff /= t.coeff;
    return root;
  }
  // Clear denominators, then invert the integer multiplication-by-a matrix.
  Integer scale(1);
  for (const auto& t : terms_) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), t.coeff.get_den_mpz_t());
  const std::size_t d = degree();
  std::vector<Integer> column(d);
  for (const auto& t : terms_) column[t.exponent] = Integer(t.coeff * scale);
  const auto& phi = cyclotomic_polynomial(order_);
  std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = column[i];
    // column <- x * column mod Phi_N
    Integer top = column[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) column[i] = column[i - 1];
    column[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < d; ++i) column[i] -= top * static_cast<long>(phi[i]);
    }
  }
  auto solution = solve_unit_column(std::move(m));
  if (!solution) return std::nullopt;
  for (auto& x : *solution) x *= scale;
  return from_coefficients(order_, *solution);
}

Cyclotomic Cyclotomic::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw DivisionByZero();
  return std::move(*inv);
}

Cyclotomic conj(const Cyclotomic& a) {
  if (a.rational_value()) return a;
  std::vector<Rational> poly(a.order());
  for (const auto& t : a.terms()) poly[(a.order() - t.exponent) % a.order()] += t.coeff;
  return Cyclotomic::from_polynomial(a.order(), poly);
}

ApproxComplex numeric_value(const Cyclotomic& a, double tolerance) {
  double re = 0.0, im = 0.0;
  for (const auto& t : a.terms()) {
    const double angle = 2.0 * std::numbers::pi * t.exponent / a.order();
    const double c = t.coeff.get_d();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {re, im, tolerance};
}

std::string to_string(const Cyclotomic& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const std::string zeta = "z" + std::to_string(a.order());
  for (const auto& t : a.terms()) {
    Rational c = t.coeff;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (t.exponent == 0) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += zeta + "^" + std::to_string(t.exponent);
    }
  }
  return out;
}

}  // namespace aqg
