#pragma once

#include <map>
#include <string>
#include <utility>

#include "aqg/core/report.hpp"
#include "aqg/core/types.hpp"
#include "aqg/scalars/cyclotomic.hpp"

namespace aqg {

/// CZ: the group algebra of Z with basis e_n. KZ: finitely supported
/// functions on Z with basis delta_n.
enum class PairSide { CZ, KZ };

const char* to_string(PairSide side);

/// Finitely supported element of either side; zero entries are never stored.
class SparseElement {
 public:
  explicit SparseElement(PairSide side) : side_(side) {}
  SparseElement(PairSide side, const std::map<long, Cyclotomic>& support);

  /// e_n on CZ, delta_n on KZ.
  static SparseElement basis(PairSide side, long n);

  PairSide side() const { return side_; }
  const std::map<long, Cyclotomic>& support() const { return support_; }
  Cyclotomic coefficient(long n) const;
  bool is_zero() const { return support_.empty(); }

  SparseElement& operator+=(const SparseElement& other);
  friend SparseElement operator+(SparseElement a, const SparseElement& b) { return a += b; }
  friend SparseElement operator*(const Cyclotomic& c, const SparseElement& a);
  friend bool operator==(const SparseElement&, const SparseElement&) = default;

 private:
  void set(long n, const Cyclotomic& value);

  PairSide side_;
  std::map<long, Cyclotomic> support_;
};

std::string to_string(const SparseElement& a);

/// Finitely supported element of A (x) A with keys (left index, right index).
using SparseTensor = std::map<std::pair<long, long>, Cyclotomic>;

/// Product on either side: e_m e_n = e_{m+n}; pointwise on KZ.
SparseElement pair_mult(const SparseElement& a, const SparseElement& b);

/// Delta(a)(1 (x) b). On KZ this is (x, y) -> a(x + y) b(y).
SparseTensor pair_delta_slice_right(const SparseElement& a, const SparseElement& b);

/// (a (x) 1)Delta(b). On KZ this is (x, y) -> a(x) b(x + y).
SparseTensor pair_delta_slice_left(const SparseElement& a, const SparseElement& b);

/// Full coproduct, only available on CZ: Delta(e_n) = e_n (x) e_n.
SparseTensor pair_coproduct_cz(const SparseElement& a);

/// Value of Delta(f) at (x, y) for f on KZ, i.e. f(x + y).
Cyclotomic pair_coproduct_value_kz(const SparseElement& f, long x, long y);

/// eps(e_n) = 1 on CZ; eps(f) = f(0) on KZ.
Cyclotomic pair_counit(const SparseElement& a);

/// e_n -> e_{-n} on CZ; f -> f(-.) on KZ.
SparseElement pair_antipode(const SparseElement& a);

/// phi(e_n) = [n = 0] on CZ; summation over Z on KZ.
Cyclotomic pair_integral(const SparseElement& a);

/// <a, f> = sum_n a_n f(-n) for a on CZ and f on KZ.
Cyclotomic pair_pairing(const SparseElement& a, const SparseElement& f);

/// <X, F> for X in CZ (x) CZ and F in KZ (x) KZ given as a tensor.
Cyclotomic pair_pairing(const SparseTensor& x, const SparseTensor& f);

/// CZ -> KZ: F(a)(k) = phi(e_{-k} a), so e_n -> delta_n.
/// KZ -> CZ: F(f) = sum_k f(k) e_{-k}, the element whose pairing with g is sum f g.
SparseElement pair_fourier(const SparseElement& a);

/// KZ -> CZ inverse of the CZ transform: delta_n -> e_n.
SparseElement pair_inverse_fourier(const SparseElement& f);

/// compact = a unit exists; discrete = a nonzero finitely supported cointegral exists.
TypeClassification classify_laurent_side(PairSide side);

/// True iff some nonzero h supported in [-window, window] satisfies e_1 h = h.
bool cz_has_cointegral_in_window(long window);

/// True iff some u supported in [-window, window] satisfies delta_n u = delta_n for all n.
bool kz_has_unit_in_window(long window);

/// Type certificates for both sides and their consistency with duality of types.
CheckReport laurent_type_certificates(const std::string& suite = "types");

/// Example pairing identities for n, m in [-range, range] and indicator f, g.
CheckReport laurent_pairing_identities(long range = 5, const std::string& suite = "laurent");

}  // namespace aqg
