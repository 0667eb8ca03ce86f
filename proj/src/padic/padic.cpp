#include "aqg/padic/padic.hpp"

#include <cctype>
#include <vector>

#include "aqg/error.hpp"

namespace aqg {

namespace {

Integer ipow(unsigned p, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

Rational rpow(unsigned p, long e) {
  if (e >= 0) return Rational(ipow(p, static_cast<unsigned long>(e)));
  return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
}

// Digits of a non-negative integer n placed from exponent `shift` upward.
std::map<long, unsigned> integer_digits(Integer n, unsigned p, long shift) {
  std::map<long, unsigned> out;
  const Integer base(p);
  for (long j = shift; n != 0; ++j) {
    const Integer d = n % base;
    if (d != 0) out[j] = static_cast<unsigned>(d.get_ui());
    n /= base;
  }
  return out;
}

// value = scaled * p^shift with scaled an integer; shift = lowest digit exponent.
std::pair<Integer, long> scaled(const PAdic& x) {
  if (x.is_zero()) return {Integer(0), 0};
  const long lo = x.digits().begin()->first;
  Integer n = 0;
  for (const auto& [j, d] : x.digits()) n += ipow(x.prime(), static_cast<unsigned long>(j - lo)) * d;
  return {n, lo};
}

}  // namespace

void require_prime(unsigned long p) {
  bool prime = p >= 2;
  for (unsigned long d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw PreconditionError(std::to_string(p) + " is not prime");
}

void require_same_prime(unsigned p, unsigned q) {
  if (p != q) throw PrimeMismatch(p, q);
}

PAdic::PAdic(unsigned p) : p_(p) { require_prime(p); }

PAdic::PAdic(unsigned p, const std::map<long, unsigned>& digits) : p_(p) {
  require_prime(p);
  for (const auto& [j, d] : digits) {
    if (d >= p) throw PreconditionError("digit " + std::to_string(d) + " is not below " + std::to_string(p));
    if (d != 0) digits_[j] = d;
  }
}

PAdic PAdic::from_rational(unsigned p, const Rational& r) {
  require_prime(p);
  if (sgn(r) < 0) throw PreconditionError("finite p-adic expansions are non-negative");
  Integer den = r.get_den();
  long k = 0;
  while (den % p == 0) {
    den /= p;
    ++k;
  }
  if (den != 1) throw PreconditionError(to_string(r) + " has a denominator prime to " + std::to_string(p));
  PAdic out(p);
  out.digits_ = integer_digits(r.get_num(), p, -k);
  return out;
}

PAdic PAdic::power(unsigned p, long j) { return PAdic(p, {{j, 1u}}); }

unsigned PAdic::digit(long j) const {
  const auto it = digits_.find(j);
  return it == digits_.end() ? 0u : it->second;
}

std::optional<long> PAdic::valuation() const {
  if (digits_.empty()) return std::nullopt;
  return digits_.begin()->first;
}

Rational PAdic::value() const {
  const auto [n, shift] = scaled(*this);
  return Rational(n) * rpow(p_, shift);
}

PAdic PAdic::truncate(long m) const {
  PAdic out(p_);
  for (const auto& [j, d] : digits_) {
    if (j >= m) break;
    out.digits_[j] = d;
  }
  return out;
}

std::strong_ordering operator<=>(const PAdic& a, const PAdic& b) {
  if (a.p_ != b.p_) return a.p_ <=> b.p_;
  if (a.digits_ < b.digits_) return std::strong_ordering::less;
  if (b.digits_ < a.digits_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

PAdic operator+(const PAdic& a, const PAdic& b) {
  require_same_prime(a.prime(), b.prime());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto [na, sa] = scaled(a);
  auto [nb, sb] = scaled(b);
  const long lo = std::min(sa, sb);
  na *= ipow(a.prime(), static_cast<unsigned long>(sa - lo));
  nb *= ipow(a.prime(), static_cast<unsigned long>(sb - lo));
  return PAdic(a.prime(), integer_digits(na + nb, a.prime(), lo));
}

PAdic operator*(const PAdic& a, const PAdic& b) {
  require_same_prime(a.prime(), b.prime());
  if (a.is_zero() || b.is_zero()) return PAdic(a.prime());
  const auto [na, sa] = scaled(a);
  const auto [nb, sb] = scaled(b);
  return PAdic(a.prime(), integer_digits(na * nb, a.prime(), sa + sb));
}

PAdic negate(const PAdic& x, long m) {
  const PAdic t = x.truncate(m);
  if (t.is_zero()) return t;
  const auto [n, lo] = scaled(t);
  const Integer modulus = ipow(x.prime(), static_cast<unsigned long>(m - lo));
  return PAdic(x.prime(), integer_digits((modulus - n) % modulus, x.prime(), lo));
}

PAdic subtract(const PAdic& x, const PAdic& y, long m) { return (x + negate(y, m)).truncate(m); }

ValuationNorm valuation_norm(const PAdic& x) {
  const auto v = x.valuation();
  if (!v) return {std::nullopt, Rational(0)};
  return {v, rpow(x.prime(), -*v)};
}

Rational fractional_part(const PAdic& x) { return x.truncate(0).value(); }

Cyclotomic RootOfUnity::value() const { return Cyclotomic::root_of_unity(order, exponent); }

RootOfUnity RootOfUnity::conjugate() const { return {order, exponent == 0 ? 0 : order - exponent}; }

std::string to_string(const RootOfUnity& z) {
  return "zeta(" + std::to_string(z.order) + ")^" + std::to_string(z.exponent);
}

RootOfUnity character_root(const PAdic& x, const PAdic& y) {
  const Rational f = fractional_part(x * y);
  if (!f.get_den().fits_ulong_p()) throw PreconditionError("character order exceeds machine range");
  return {f.get_den().get_ui(), f.get_num().get_ui()};
}

Cyclotomic character(const PAdic& x, const PAdic& y) { return character_root(x, y).value(); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, unsigned p) : text_(text), p_(p) {}

  PAdic parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty literal");
    if (text_.find_first_of("*^+") == std::string_view::npos) return digit_string();
    PAdic out(p_);
    for (;;) {
      skip_ws();
      out = out + term();
      skip_ws();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  unsigned long integer() {
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1000000000UL) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  long signed_integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const long v = static_cast<long>(integer());
    return negative ? -v : v;
  }

  long exponent_after_prime(std::size_t prime_pos, unsigned long prime) {
    if (prime != p_) {
      pos_ = prime_pos;
      fail("expected the prime " + std::to_string(p_));
    }
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '^') fail("expected '^'");
    ++pos_;
    return signed_integer();
  }

  PAdic term() {
    const std::size_t start = pos_;
    const unsigned long first = integer();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      const std::size_t prime_pos = pos_;
      const unsigned long prime = integer();
      const long j = exponent_after_prime(prime_pos, prime);
      if (first >= p_) {
        pos_ = start;
        fail("digit " + std::to_string(first) + " out of range for p=" + std::to_string(p_));
      }
      return PAdic(p_, {{j, static_cast<unsigned>(first)}});
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      const long j = exponent_after_prime(start, first);
      return PAdic::power(p_, j);
    }
    if (first >= p_) {
      pos_ = start;
      fail("digit " + std::to_string(first) + " out of range for p=" + std::to_string(p_));
    }
    return PAdic(p_, {{0, static_cast<unsigned>(first)}});
  }

  unsigned digit_value(char c) {
    unsigned v = 0;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      v = static_cast<unsigned>(c - '0');
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      v = static_cast<unsigned>(std::tolower(static_cast<unsigned char>(c)) - 'a') + 10;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    if (v >= p_) fail(std::string("digit '") + c + "' out of range for p=" + std::to_string(p_));
    return v;
  }

  PAdic digit_string() {
    std::size_t end = text_.size();
    while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    const std::string_view body = text_.substr(pos_, end - pos_);
    const std::size_t point = body.find('.');
    const std::size_t int_len = point == std::string_view::npos ? body.size() : point;
    if (int_len == 0 && point == std::string_view::npos) fail("expected digits");
    std::map<long, unsigned> digits;
    for (std::size_t i = 0; i < body.size(); ++i, ++pos_) {
      if (i == point) continue;
      const long j = i < int_len ? static_cast<long>(int_len - 1 - i) : -static_cast<long>(i - int_len);
      digits[j] = digit_value(body[i]);
    }
    if (point != std::string_view::npos && point + 1 == body.size()) fail("expected digits after the radix point");
    return PAdic(p_, digits);
  }

  std::string_view text_;
  unsigned p_;
  std::size_t pos_ = 0;
};

}  // namespace

PAdic parse_padic(std::string_view text, unsigned p) {
  require_prime(p);
  return Parser(text, p).parse();
}

std::string format_padic(const PAdic& x) {
  if (x.is_zero()) return "0";
  std::string out;
  const std::string p = std::to_string(x.prime());
  for (const auto& [j, d] : x.digits()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(d);
    if (j != 0) out += "*" + p + "^" + std::to_string(j);
  }
  return out;
}

}  // namespace aqg
