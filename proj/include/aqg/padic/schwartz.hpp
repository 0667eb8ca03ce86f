#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqg/core/random.hpp"
#include "aqg/core/report.hpp"
#include "aqg/padic/padic.hpp"

namespace aqg {

/// The ball c + p^m Z_p with c reduced modulo p^m.
struct Ball {
  PAdic center;
  long level = 0;

  Ball(PAdic c, long m) : center(c.truncate(m)), level(m) {}
  unsigned prime() const { return center.prime(); }
  bool contains(const PAdic& x) const { return x.truncate(level) == center; }
  friend bool operator==(const Ball&, const Ball&) = default;
};

/// "[c +] p^m*Zp", with "Zp" for m = 0.
Ball parse_ball(std::string_view text, unsigned p);
std::string format_ball(const Ball& b);

/// Locally constant compactly supported function on Q_p: a finite set of
/// disjoint cells c + p^m Z_p at one level m with nonzero values. Equality
/// compares the common refinement, so representations at different levels
/// of the same function are equal.
class SchwartzFunction {
 public:
  using Cells = std::map<PAdic, Cyclotomic>;

  SchwartzFunction(unsigned p, long level);
  /// Every center must already be reduced modulo p^level.
  SchwartzFunction(unsigned p, long level, const Cells& cells);

  unsigned prime() const { return p_; }
  long level() const { return level_; }
  const Cells& cells() const { return cells_; }
  bool is_zero() const { return cells_.empty(); }

  /// (n, m): the support lies in p^n Z_p and f is constant on p^m Z_p cosets.
  std::pair<long, long> window() const;

  Cyclotomic operator()(const PAdic& x) const;

  /// Same function at a finer level.
  SchwartzFunction refine(long level) const;

  /// Cell averages at a coarser level: E(f)(c) = p^{level - m} sum of the subcell values.
  SchwartzFunction average(long level) const;

  friend bool operator==(const SchwartzFunction& a, const SchwartzFunction& b);

 private:
  unsigned p_;
  long level_;
  Cells cells_;
};

SchwartzFunction indicator(const Ball& b);

/// p^n Z_p indicator, the h_n of the group-like examples.
SchwartzFunction subgroup_indicator(unsigned p, long n);

/// Drops zero cells; with `coarsen`, merges complete sibling families with equal values.
SchwartzFunction canonicalize(const SchwartzFunction& f, bool coarsen = false);

SchwartzFunction schwartz_add(const SchwartzFunction& f, const SchwartzFunction& g);
SchwartzFunction schwartz_scale(const SchwartzFunction& f, const Cyclotomic& c);
SchwartzFunction schwartz_mul(const SchwartzFunction& f, const SchwartzFunction& g);
SchwartzFunction schwartz_star(const SchwartzFunction& f);
/// f(-x).
SchwartzFunction schwartz_reflect(const SchwartzFunction& f);

/// Haar measure with mu(Z_p) = 1.
Cyclotomic haar_integral(const SchwartzFunction& f);

/// Haar measure rescaled by a positive factor.
struct HaarMeasure {
  Rational scale{1};

  Cyclotomic integrate(const SchwartzFunction& f) const;
  /// The rescaling with integrate(f) = 1.
  static HaarMeasure normalized_for(const SchwartzFunction& f);
};

/// (f * g)(t) = int f(s) g(t - s) ds.
SchwartzFunction schwartz_convolve(const SchwartzFunction& f, const SchwartzFunction& g,
                                   const HaarMeasure& mu = {});

/// F(f)(y) = int f(x) conj(chi(x, y)) dx, computed cell by cell:
/// F(1_{c + p^m Z_p})(y) = conj(chi(c, y)) p^{-m} 1_{p^{-m} Z_p}(y).
SchwartzFunction padic_fourier(const SchwartzFunction& f, const HaarMeasure& mu = {});

/// Inverse of padic_fourier for the self-dual measure: F^{-1}(g)(x) = F(g)(-x).
SchwartzFunction padic_inverse_fourier(const SchwartzFunction& g);

/// Representatives of the level-`level` cells inside p^low Z_p.
std::vector<PAdic> cell_representatives(unsigned p, long low, long level);

/// Compares Delta(f)(1 (x) f) with f (x) f pointwise, i.e. f(x + y) f(y)
/// against f(x) f(y), on a grid one level finer and one level wider than f.
std::optional<std::string> coproduct_condition_witness(const SchwartzFunction& f);

/// f != 0, f^2 = f = f^*, and the coproduct condition.
std::optional<std::string> group_like_witness(const SchwartzFunction& f);

CheckReport padic_group_like_suite(const std::vector<long>& ns, unsigned p, const std::string& suite = "group-like");

/// Random function with level m in [-2, 2], window n in [max(-2, m - 2), m],
/// at most six cells and values a + b i with a, b in [-3, 3].
SchwartzFunction random_schwartz(unsigned p, Rng& rng);

std::string to_string(const SchwartzFunction& f);

}  // namespace aqg
