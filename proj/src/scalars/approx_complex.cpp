#include "aqg/scalars/approx_complex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "aqg/error.hpp"

namespace aqg {

double ApproxComplex::abs() const { return std::hypot(re, im); }

ApproxComplex ApproxComplex::inverse() const {
  if (is_zero(*this)) throw DivisionByZero();
  const double n = re * re + im * im;
  return {re / n, -im / n, tolerance};
}

ApproxComplex& ApproxComplex::operator+=(const ApproxComplex& o) {
  re += o.re;
  im += o.im;
  tolerance = std::max(tolerance, o.tolerance);
  return *this;
}

ApproxComplex& ApproxComplex::operator-=(const ApproxComplex& o) {
  re -= o.re;
  im -= o.im;
  tolerance = std::max(tolerance, o.tolerance);
  return *this;
}

ApproxComplex& ApproxComplex::operator*=(const ApproxComplex& o) {
  const double r = re * o.re - im * o.im;
  const double i = re * o.im + im * o.re;
  re = r;
  im = i;
  tolerance = std::max(tolerance, o.tolerance);
  return *this;
}

ApproxComplex& ApproxComplex::operator/=(const ApproxComplex& o) {
  ApproxComplex inv = o.inverse();
  return *this *= inv;
}

bool operator==(const ApproxComplex& a, const ApproxComplex& b) {
  return std::hypot(a.re - b.re, a.im - b.im) <= std::max(a.tolerance, b.tolerance);
}

bool is_zero(const ApproxComplex& z) { return z.abs() <= z.tolerance; }

ApproxComplex with_tolerance(ApproxComplex z, double tolerance) {
  z.tolerance = tolerance;
  return z;
}

std::string to_string(const ApproxComplex& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", z.re, z.im);
  return buf;
}

}  // namespace aqg
