#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "aqg/scalars/cyclotomic.hpp"
#include "aqg/scalars/rational.hpp"

namespace aqg {

/// Throws PreconditionError unless p is prime.
void require_prime(unsigned long p);

/// Finite base-p expansion sum_j d_j p^j with digits 0 <= d_j < p, i.e. a
/// non-negative element of Z[1/p]. Zero digits are never stored.
class PAdic {
 public:
  explicit PAdic(unsigned p = 2);
  PAdic(unsigned p, const std::map<long, unsigned>& digits);

  /// r must be non-negative with denominator a power of p.
  static PAdic from_rational(unsigned p, const Rational& r);
  static PAdic power(unsigned p, long j);

  unsigned prime() const { return p_; }
  const std::map<long, unsigned>& digits() const { return digits_; }
  unsigned digit(long j) const;
  bool is_zero() const { return digits_.empty(); }
  std::optional<long> valuation() const;
  Rational value() const;

  /// Digits below exponent m, i.e. the canonical representative modulo p^m.
  PAdic truncate(long m) const;

  friend bool operator==(const PAdic&, const PAdic&) = default;
  friend std::strong_ordering operator<=>(const PAdic& a, const PAdic& b);

 private:
  unsigned p_;
  std::map<long, unsigned> digits_;
};

void require_same_prime(unsigned p, unsigned q);

PAdic operator+(const PAdic& a, const PAdic& b);
PAdic operator*(const PAdic& a, const PAdic& b);

/// Canonical representative of -x modulo p^m (digits below m).
PAdic negate(const PAdic& x, long m);

/// x - y modulo p^m.
PAdic subtract(const PAdic& x, const PAdic& y, long m);

struct ValuationNorm {
  std::optional<long> valuation;  // nullopt for 0
  Rational norm;
};

ValuationNorm valuation_norm(const PAdic& x);

/// sum_{j<0} x_j p^j, in [0, 1).
Rational fractional_part(const PAdic& x);

/// exp(2 pi i a / order) with a / order in lowest terms.
struct RootOfUnity {
  unsigned long order = 1;
  unsigned long exponent = 0;

  Cyclotomic value() const;
  RootOfUnity conjugate() const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// "zeta(N)^a"
std::string to_string(const RootOfUnity& z);

RootOfUnity character_root(const PAdic& x, const PAdic& y);

/// chi(x, y) = exp(2 pi i x y).
Cyclotomic character(const PAdic& x, const PAdic& y);

/// Accepts "d*p^j + ..." sums (a bare "d" is d*p^0, a bare "p^j" is 1*p^j)
/// or a base-p digit string with an optional radix point, e.g. "102.1".
PAdic parse_padic(std::string_view text, unsigned p);

/// Canonical "d*p^j" terms in increasing exponent, with "d" for j = 0.
std::string format_padic(const PAdic& x);

}  // namespace aqg
