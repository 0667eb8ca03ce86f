#pragma once

#include <concepts>

#include "aqg/scalars/approx_complex.hpp"
#include "aqg/scalars/cyclotomic.hpp"

namespace aqg {

/// Coefficient field for the quantum group machinery: exact cyclotomic
/// numbers or tolerance-carrying doubles. Complex conjugation is required
/// because the *-structure is antilinear.
template <class S>
concept Scalar = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { conj(a) } -> std::same_as<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

static_assert(Scalar<Cyclotomic>);
static_assert(Scalar<ApproxComplex>);

/// Exact cyclotomic values map to the float backend through numeric_value.
template <Scalar Target>
Target convert_scalar(const Cyclotomic& x, double tolerance = kDefaultTolerance);

template <>
inline Cyclotomic convert_scalar<Cyclotomic>(const Cyclotomic& x, double) {
  return x;
}

template <>
inline ApproxComplex convert_scalar<ApproxComplex>(const Cyclotomic& x, double tolerance) {
  return numeric_value(x, tolerance);
}

}  // namespace aqg

namespace aqg {

/// Real part of the complex embedding; used only for positivity spot checks.
inline double numeric_real(const Cyclotomic& x) { return numeric_value(x).re; }
inline double numeric_real(const ApproxComplex& x) { return x.re; }

}  // namespace aqg
