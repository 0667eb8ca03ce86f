#include "aqg/examples/laurent_pair.hpp"

#include <optional>
#include <vector>

#include "aqg/core/linalg.hpp"
#include "aqg/error.hpp"

namespace aqg {

namespace {

void require_side(const SparseElement& a, PairSide side, const char* op) {
  if (a.side() != side) throw PreconditionError(std::string(op) + ": expected an element of " + to_string(side));
}

void require_same_side(const SparseElement& a, const SparseElement& b) {
  if (a.side() != b.side()) throw PreconditionError("elements live on different sides of the pair");
}

void accumulate(SparseTensor& t, long x, long y, const Cyclotomic& v) {
  auto [it, inserted] = t.try_emplace({x, y}, v);
  if (!inserted) it->second += v;
  if (aqg::is_zero(it->second)) t.erase(it);
}

}  // namespace

const char* to_string(PairSide side) { return side == PairSide::CZ ? "CZ" : "KZ"; }

SparseElement::SparseElement(PairSide side, const std::map<long, Cyclotomic>& support) : side_(side) {
  for (const auto& [n, v] : support) set(n, v);
}

SparseElement SparseElement::basis(PairSide side, long n) { return SparseElement(side, {{n, Cyclotomic(1)}}); }

Cyclotomic SparseElement::coefficient(long n) const {
  const auto it = support_.find(n);
  return it == support_.end() ? Cyclotomic(0) : it->second;
}

void SparseElement::set(long n, const Cyclotomic& value) {
  if (aqg::is_zero(value)) {
    support_.erase(n);
  } else {
    support_[n] = value;
  }
}

SparseElement& SparseElement::operator+=(const SparseElement& other) {
  require_same_side(*this, other);
  for (const auto& [n, v] : other.support_) set(n, coefficient(n) + v);
  return *this;
}

SparseElement operator*(const Cyclotomic& c, const SparseElement& a) {
  SparseElement out(a.side());
  for (const auto& [n, v] : a.support_) out.set(n, c * v);
  return out;
}

std::string to_string(const SparseElement& a) {
  if (a.is_zero()) return "0";
  const char* sym = a.side() == PairSide::CZ ? "e_" : "delta_";
  std::string out;
  for (const auto& [n, v] : a.support()) {
    if (!out.empty()) out += " + ";
    const std::string basis = sym + std::to_string(n);
    out += v == Cyclotomic(1) ? basis : "(" + to_string(v) + ")*" + basis;
  }
  return out;
}

SparseElement pair_mult(const SparseElement& a, const SparseElement& b) {
  require_same_side(a, b);
  std::map<long, Cyclotomic> out;
  if (a.side() == PairSide::CZ) {
    for (const auto& [m, x] : a.support())
      for (const auto& [n, y] : b.support()) out[m + n] += x * y;
  } else {
    for (const auto& [n, x] : a.support()) {
      const auto y = b.coefficient(n);
      if (!is_zero(y)) out[n] = x * y;
    }
  }
  return SparseElement(a.side(), out);
}

SparseTensor pair_delta_slice_right(const SparseElement& a, const SparseElement& b) {
  require_same_side(a, b);
  SparseTensor out;
  if (a.side() == PairSide::CZ) {
    // Delta(e_n)(1 (x) e_m) = e_n (x) e_{n+m}
    for (const auto& [n, x] : a.support())
      for (const auto& [m, y] : b.support()) accumulate(out, n, n + m, x * y);
  } else {
    for (const auto& [y, g] : b.support())
      for (const auto& [s, f] : a.support()) accumulate(out, s - y, y, f * g);
  }
  return out;
}

SparseTensor pair_delta_slice_left(const SparseElement& a, const SparseElement& b) {
  require_same_side(a, b);
  SparseTensor out;
  if (a.side() == PairSide::CZ) {
    // (e_n (x) 1)Delta(e_m) = e_{n+m} (x) e_m
    for (const auto& [n, x] : a.support())
      for (const auto& [m, y] : b.support()) accumulate(out, n + m, m, x * y);
  } else {
    for (const auto& [x, f] : a.support())
      for (const auto& [s, g] : b.support()) accumulate(out, x, s - x, f * g);
  }
  return out;
}

SparseTensor pair_coproduct_cz(const SparseElement& a) {
  require_side(a, PairSide::CZ, "pair_coproduct_cz");
  SparseTensor out;
  for (const auto& [n, x] : a.support()) accumulate(out, n, n, x);
  return out;
}

Cyclotomic pair_coproduct_value_kz(const SparseElement& f, long x, long y) {
  require_side(f, PairSide::KZ, "pair_coproduct_value_kz");
  return f.coefficient(x + y);
}

Cyclotomic pair_counit(const SparseElement& a) {
  if (a.side() == PairSide::KZ) return a.coefficient(0);
  Cyclotomic out(0);
  for (const auto& [n, x] : a.support()) out += x;
  return out;
}

SparseElement pair_antipode(const SparseElement& a) {
  std::map<long, Cyclotomic> out;
  for (const auto& [n, x] : a.support()) out[-n] = x;
  return SparseElement(a.side(), out);
}

Cyclotomic pair_integral(const SparseElement& a) {
  if (a.side() == PairSide::CZ) return a.coefficient(0);
  Cyclotomic out(0);
  for (const auto& [n, x] : a.support()) out += x;
  return out;
}

Cyclotomic pair_pairing(const SparseElement& a, const SparseElement& f) {
  require_side(a, PairSide::CZ, "pair_pairing");
  require_side(f, PairSide::KZ, "pair_pairing");
  Cyclotomic out(0);
  for (const auto& [n, x] : a.support()) {
    const auto y = f.coefficient(-n);
    if (!is_zero(y)) out += x * y;
  }
  return out;
}

Cyclotomic pair_pairing(const SparseTensor& x, const SparseTensor& f) {
  Cyclotomic out(0);
  for (const auto& [key, v] : x) {
    const auto it = f.find({-key.first, -key.second});
    if (it != f.end()) out += v * it->second;
  }
  return out;
}

SparseElement pair_fourier(const SparseElement& a) {
  std::map<long, Cyclotomic> out;
  if (a.side() == PairSide::CZ) {
    // phi(e_{-k} a) vanishes unless k is in the support of a.
    for (const auto& [k, x] : a.support()) out[k] = pair_integral(pair_mult(SparseElement::basis(PairSide::CZ, -k), a));
    return SparseElement(PairSide::KZ, out);
  }
  for (const auto& [k, x] : a.support()) out[-k] = x;
  return SparseElement(PairSide::CZ, out);
}

SparseElement pair_inverse_fourier(const SparseElement& f) {
  if (f.side() != PairSide::KZ) throw PreconditionError("inverse transform expects an element of K(Z)");
  return SparseElement(PairSide::CZ, f.support());
}

bool cz_has_cointegral_in_window(long window) {
  // Unknowns h_{-W..W}; rows: coefficient of e_k in e_1 h - h for k in [-W, W+1].
  const std::size_t d = static_cast<std::size_t>(2 * window + 1);
  Matrix<Cyclotomic> m(d + 1, d);
  for (std::size_t col = 0; col < d; ++col) {
    m(col + 1, col) += 1;  // e_1 h shifts h_n to position n + 1
    m(col, col) -= 1;
  }
  return !nullspace(m).empty();
}

bool kz_has_unit_in_window(long window) {
  // Unknowns u_{-W..W}; rows: delta_n u = delta_n for n in [-W-1, W+1], i.e. u_n = 1.
  const std::size_t d = static_cast<std::size_t>(2 * window + 1);
  Matrix<Cyclotomic> m(d + 2, d);
  std::vector<Cyclotomic> rhs(d + 2, Cyclotomic(1));
  for (std::size_t col = 0; col < d; ++col) m(col + 1, col) = 1;
  return solve_general(m, rhs).has_value();
}

namespace {

// Largest index of a nonempty support is moved out of the support by e_1, so
// no nonempty finite support is invariant under the shift.
std::optional<long> shift_escape_witness(const std::map<long, Cyclotomic>& support) {
  if (support.empty()) return std::nullopt;
  const long top = support.rbegin()->first + 1;
  return support.count(top) == 0 ? std::optional<long>(top) : std::nullopt;
}

}  // namespace

TypeClassification classify_laurent_side(PairSide side) {
  constexpr long kWindow = 8;
  if (side == PairSide::CZ) return {true, cz_has_cointegral_in_window(kWindow)};
  return {kz_has_unit_in_window(kWindow), true};
}

CheckReport laurent_type_certificates(const std::string& suite) {
  CheckReport report;
  constexpr long kRange = 8;

  {
    Stopwatch clock;
    std::optional<std::string> witness;
    const auto e0 = SparseElement::basis(PairSide::CZ, 0);
    for (long n = -kRange; n <= kRange && !witness; ++n) {
      const auto en = SparseElement::basis(PairSide::CZ, n);
      if (pair_mult(e0, en) != en || pair_mult(en, e0) != en) witness = "n=" + std::to_string(n);
    }
    report.record(suite, "CZ:unit", witness, clock.elapsed_ms());
  }

  {
    Stopwatch clock;
    std::optional<std::string> witness;
    for (long w = 0; w <= kRange && !witness; ++w) {
      if (cz_has_cointegral_in_window(w)) witness = "cointegral supported in window " + std::to_string(w);
    }
    // Every nonempty support tried has an index pushed outside by e_1.
    const auto e1 = SparseElement::basis(PairSide::CZ, 1);
    for (long lo = -kRange; lo <= kRange && !witness; ++lo) {
      for (long hi = lo; hi <= kRange && !witness; ++hi) {
        std::map<long, Cyclotomic> h;
        for (long k = lo; k <= hi; ++k) h[k] = 1;
        const auto shifted = pair_mult(e1, SparseElement(PairSide::CZ, h));
        const auto escape = shift_escape_witness(h);
        if (!escape || shifted.coefficient(*escape) == Cyclotomic(0)) {
          witness = "support [" + std::to_string(lo) + "," + std::to_string(hi) + "] is shift invariant";
        }
      }
    }
    report.record(suite, "CZ:no_cointegral", witness, clock.elapsed_ms());
  }

  {
    Stopwatch clock;
    std::optional<std::string> witness;
    const auto d0 = SparseElement::basis(PairSide::KZ, 0);
    for (long lo = -kRange; lo <= kRange && !witness; ++lo)
      for (long hi = lo; hi <= kRange && !witness; ++hi) {
        std::map<long, Cyclotomic> f;
        for (long k = lo; k <= hi; ++k) f[k] = Cyclotomic(k * k - 3);
        const SparseElement fe(PairSide::KZ, f);
        if (pair_mult(fe, d0) != pair_counit(fe) * d0) {
          witness = "f=" + to_string(fe);
        }
      }
    report.record(suite, "KZ:cointegral", witness, clock.elapsed_ms());
  }

  {
    Stopwatch clock;
    std::optional<std::string> witness;
    for (long w = 0; w <= kRange && !witness; ++w) {
      if (kz_has_unit_in_window(w)) witness = "unit supported in window " + std::to_string(w);
    }
    report.record(suite, "KZ:no_unit", witness, clock.elapsed_ms());
  }

  {
    Stopwatch clock;
    std::optional<std::string> witness;
    // phi on CZ is the functional <., delta_0>, the KZ cointegral.
    for (long n = -kRange; n <= kRange && !witness; ++n) {
      const auto en = SparseElement::basis(PairSide::CZ, n);
      if (pair_integral(en) != pair_pairing(en, SparseElement::basis(PairSide::KZ, 0))) {
        witness = "n=" + std::to_string(n);
      }
    }
    report.record(suite, "CZ:phi_is_dual_cointegral", witness, clock.elapsed_ms());
  }

  {
    Stopwatch clock;
    const auto cz = classify_laurent_side(PairSide::CZ);
    const auto kz = classify_laurent_side(PairSide::KZ);
    std::optional<std::string> witness;
    if (cz != TypeClassification{true, false}) witness = "CZ classified incorrectly";
    if (kz != TypeClassification{false, true}) witness = "KZ classified incorrectly";
    if (cz.compact != kz.discrete || cz.discrete != kz.compact) witness = "types are not exchanged by duality";
    report.record(suite, "type_duality", witness, clock.elapsed_ms());
  }
  return report;
}

CheckReport laurent_pairing_identities(long range, const std::string& suite) {
  std::vector<SparseElement> indicators;
  const long reach = 2 * range;
  for (long k = -reach; k <= reach; ++k) indicators.push_back(SparseElement::basis(PairSide::KZ, k));
  for (long lo = -reach; lo + 2 <= reach; lo += 2) {
    std::map<long, Cyclotomic> f;
    for (long k = lo; k <= lo + 2; ++k) f[k] = 1;
    indicators.emplace_back(PairSide::KZ, f);
  }

  CheckReport report;
  Stopwatch clock;
  std::optional<std::string> witness;
  for (long n = -range; n <= range && !witness; ++n) {
    const auto en = SparseElement::basis(PairSide::CZ, n);
    for (const auto& f : indicators) {
      if (pair_pairing(en, f) != f.coefficient(-n)) {
        witness = "n=" + std::to_string(n) + " f=" + to_string(f);
        break;
      }
    }
  }
  report.record(suite, "pairing_evaluates_at_minus_n", witness, clock.elapsed_ms());

  Stopwatch clock2;
  witness.reset();
  for (long n = -range; n <= range && !witness; ++n) {
    const auto en = SparseElement::basis(PairSide::CZ, n);
    const auto delta_en = pair_coproduct_cz(en);
    for (std::size_t i = 0; i < indicators.size() && !witness; ++i)
      for (std::size_t j = 0; j < indicators.size() && !witness; ++j) {
        const auto& f = indicators[i];
        const auto& g = indicators[j];
        SparseTensor fg;
        for (const auto& [x, fx] : f.support())
          for (const auto& [y, gy] : g.support()) fg[{x, y}] = fx * gy;
        if (pair_pairing(en, pair_mult(f, g)) != pair_pairing(delta_en, fg)) {
          witness = "n=" + std::to_string(n) + " f=" + to_string(f) + " g=" + to_string(g);
        }
      }
  }
  report.record(suite, "product_dual_to_coproduct", witness, clock2.elapsed_ms());

  Stopwatch clock3;
  witness.reset();
  for (long n = -range; n <= range && !witness; ++n)
    for (long m = -range; m <= range && !witness; ++m) {
      const auto en = SparseElement::basis(PairSide::CZ, n);
      const auto em = SparseElement::basis(PairSide::CZ, m);
      for (const auto& f : indicators) {
        // <e_n (x) e_m, Delta f> = Delta(f)(-n, -m)
        if (pair_pairing(pair_mult(en, em), f) != pair_coproduct_value_kz(f, -n, -m)) {
          witness = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " f=" + to_string(f);
          break;
        }
      }
    }
  report.record(suite, "coproduct_dual_to_product", witness, clock3.elapsed_ms());
  return report;
}

}  // namespace aqg
