#pragma once

#include <string>

namespace aqg {

inline constexpr double kDefaultTolerance = 1e-9;

/// Floating point complex number carrying the absolute tolerance used by
/// its equality and zero tests. Binary operations keep the larger tolerance.
struct ApproxComplex {
  double re = 0.0;
  double im = 0.0;
  double tolerance = kDefaultTolerance;

  ApproxComplex() = default;
  ApproxComplex(double real) : re(real) {}  // NOLINT(google-explicit-constructor)
  ApproxComplex(double real, double imag, double tol = kDefaultTolerance) : re(real), im(imag), tolerance(tol) {}

  double abs() const;
  ApproxComplex inverse() const;

  ApproxComplex& operator+=(const ApproxComplex& o);
  ApproxComplex& operator-=(const ApproxComplex& o);
  ApproxComplex& operator*=(const ApproxComplex& o);
  ApproxComplex& operator/=(const ApproxComplex& o);

  friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
  friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
  friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
  friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
  friend ApproxComplex operator-(const ApproxComplex& a) { return {-a.re, -a.im, a.tolerance}; }

  /// |a - b| <= max(a.tolerance, b.tolerance)
  friend bool operator==(const ApproxComplex& a, const ApproxComplex& b);
};

inline ApproxComplex conj(const ApproxComplex& z) { return {z.re, -z.im, z.tolerance}; }
bool is_zero(const ApproxComplex& z);
ApproxComplex with_tolerance(ApproxComplex z, double tolerance);
std::string to_string(const ApproxComplex& z);

}  // namespace aqg
