#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqg/scalars/approx_complex.hpp"
#include "aqg/scalars/rational.hpp"

namespace aqg {

/// Integer coefficients of the N-th cyclotomic polynomial, dense, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(unsigned order);

/// Euler's totient, i.e. deg Phi_N.
unsigned euler_phi(unsigned n);

/// An element of Q(zeta_N), stored as a polynomial in zeta_N reduced modulo
/// Phi_N. Only nonzero coefficients are kept, ordered by exponent, so the
/// representation at a fixed order is canonical. The order is never lowered
/// to the conductor; comparisons lift both sides to the lcm of the orders.
class Cyclotomic {
 public:
  struct Term {
    unsigned exponent;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Cyclotomic() = default;
  Cyclotomic(long value);             // NOLINT(google-explicit-constructor)
  Cyclotomic(int value) : Cyclotomic(static_cast<long>(value)) {}  // NOLINT
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_N^exponent; the exponent is taken mod N.
  static Cyclotomic root_of_unity(unsigned order, long exponent);

  /// Coefficients in the reduced basis 1, z, ..., z^(deg-1); the length must equal deg Phi_N.
  static Cyclotomic from_coefficients(unsigned order, std::span<const Rational> coeffs);

  /// Any polynomial in zeta_N (arbitrary length), reduced mod Phi_N.
  static Cyclotomic from_polynomial(unsigned order, std::span<const Rational> poly);

  unsigned order() const { return order_; }
  std::size_t degree() const { return euler_phi(order_); }
  std::span<const Term> terms() const { return terms_; }
  std::vector<Rational> coefficients() const;

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> rational_value() const;

  /// Re-expresses the value at order `multiple`, which must be a multiple of order().
  Cyclotomic at_order(unsigned multiple) const;

  /// Throws DivisionByZero for zero.
  Cyclotomic inverse() const;
  /// Returns nullopt instead of throwing.
  std::optional<Cyclotomic> try_inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(Cyclotomic a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(unsigned order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) {}

  unsigned order_ = 1;
  std::vector<Term> terms_;
};

/// Complex conjugation: zeta_N -> zeta_N^(N-1), extended Q-linearly.
Cyclotomic conj(const Cyclotomic& a);
inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }

/// Both values re-expressed at lcm(order(a), order(b)).
std::pair<Cyclotomic, Cyclotomic> unify_order(const Cyclotomic& a, const Cyclotomic& b);

/// Evaluates zeta_N -> exp(2 pi i / N) in double precision.
ApproxComplex numeric_value(const Cyclotomic& a, double tolerance = kDefaultTolerance);

/// Human readable form, e.g. "1/2 - 3*z8^3".
std::string to_string(const Cyclotomic& a);

}  // namespace aqg
