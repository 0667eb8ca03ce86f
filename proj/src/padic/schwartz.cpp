#include "aqg/padic/schwartz.hpp"

#include <algorithm>
#include <cctype>

#include "aqg/error.hpp"

namespace aqg {

namespace {

Rational rpow(unsigned p, long e) {
  Integer n;
  mpz_ui_pow_ui(n.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(n) : Rational(Integer(1), n);
}

void accumulate(SchwartzFunction::Cells& cells, const PAdic& c, const Cyclotomic& v) {
  auto [it, inserted] = cells.try_emplace(c, v);
  if (!inserted) it->second += v;
  if (is_zero(it->second)) cells.erase(it);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Ball parse_ball(std::string_view text, unsigned p) {
  require_prime(p);
  const std::size_t zp = text.rfind("Zp");
  if (zp == std::string_view::npos) throw ParseError("expected 'Zp'", text.size());
  if (!trim(text.substr(zp + 2)).empty()) throw ParseError("unexpected text after 'Zp'", zp + 2);
  const std::size_t plus = text.substr(0, zp).rfind('+');
  const std::size_t scale_start = plus == std::string_view::npos ? 0 : plus + 1;
  std::string_view scale = trim(text.substr(scale_start, zp - scale_start));
  long level = 0;
  if (!scale.empty()) {
    if (scale.back() != '*') throw ParseError("expected '*' before 'Zp'", zp);
    scale.remove_suffix(1);
    const std::size_t offset = static_cast<std::size_t>(scale.data() - text.data());
    try {
      const PAdic factor = parse_padic(scale, p);
      if (factor.digits().size() != 1 || factor.digits().begin()->second != 1) {
        throw ParseError("ball scale must be a power of " + std::to_string(p), offset);
      }
      level = factor.digits().begin()->first;
    } catch (const ParseError& e) {
      throw ParseError("invalid ball scale", offset + e.position());
    }
  }
  PAdic center(p);
  if (plus != std::string_view::npos) center = parse_padic(text.substr(0, plus), p);
  return Ball(center, level);
}

std::string format_ball(const Ball& b) {
  std::string out;
  if (!b.center.is_zero()) out = format_padic(b.center) + " + ";
  if (b.level != 0) out += std::to_string(b.prime()) + "^" + std::to_string(b.level) + "*";
  return out + "Zp";
}

SchwartzFunction::SchwartzFunction(unsigned p, long level) : p_(p), level_(level) { require_prime(p); }

SchwartzFunction::SchwartzFunction(unsigned p, long level, const Cells& cells) : SchwartzFunction(p, level) {
  for (const auto& [c, v] : cells) {
    require_same_prime(p, c.prime());
    if (c.truncate(level) != c) {
      throw PreconditionError("cell center " + format_padic(c) + " is not reduced modulo p^" + std::to_string(level));
    }
    if (!aqg::is_zero(v)) cells_.emplace(c, v);
  }
}

std::pair<long, long> SchwartzFunction::window() const {
  long n = level_;
  for (const auto& [c, v] : cells_) {
    if (const auto val = c.valuation()) n = std::min(n, *val);
  }
  return {n, level_};
}

Cyclotomic SchwartzFunction::operator()(const PAdic& x) const {
  require_same_prime(p_, x.prime());
  const auto it = cells_.find(x.truncate(level_));
  return it == cells_.end() ? Cyclotomic(0) : it->second;
}

std::vector<PAdic> cell_representatives(unsigned p, long low, long level) {
  std::vector<PAdic> out{PAdic(p)};
  for (long j = low; j < level; ++j) {
    std::vector<PAdic> next;
    next.reserve(out.size() * p);
    for (const auto& x : out)
      for (unsigned d = 0; d < p; ++d) {
        auto digits = x.digits();
        if (d != 0) digits[j] = d;
        next.emplace_back(p, digits);
      }
    out = std::move(next);
  }
  return out;
}

SchwartzFunction SchwartzFunction::refine(long level) const {
  if (level < level_) throw PreconditionError("refinement must not lower the level");
  if (level == level_) return *this;
  const auto reps = cell_representatives(p_, level_, level);
  Cells out;
  for (const auto& [c, v] : cells_)
    for (const auto& r : reps) out.emplace(c + r, v);
  SchwartzFunction f(p_, level);
  f.cells_ = std::move(out);
  return f;
}

SchwartzFunction SchwartzFunction::average(long level) const {
  if (level > level_) throw PreconditionError("averaging must not raise the level");
  if (level == level_) return *this;
  const Cyclotomic weight(rpow(p_, level - level_));
  Cells out;
  for (const auto& [c, v] : cells_) accumulate(out, c.truncate(level), weight * v);
  SchwartzFunction f(p_, level);
  f.cells_ = std::move(out);
  return f;
}

bool operator==(const SchwartzFunction& a, const SchwartzFunction& b) {
  if (a.p_ != b.p_) return false;
  const long level = std::max(a.level_, b.level_);
  return a.refine(level).cells_ == b.refine(level).cells_;
}

SchwartzFunction indicator(const Ball& b) {
  return SchwartzFunction(b.prime(), b.level, {{b.center, Cyclotomic(1)}});
}

SchwartzFunction subgroup_indicator(unsigned p, long n) { return indicator(Ball(PAdic(p), n)); }

SchwartzFunction canonicalize(const SchwartzFunction& f, bool coarsen) {
  SchwartzFunction out(f.prime(), f.level(), f.cells());
  if (!coarsen) return out;
  const unsigned p = f.prime();
  while (!out.is_zero()) {
    const long up = out.level() - 1;
    std::map<PAdic, std::vector<Cyclotomic>> families;
    for (const auto& [c, v] : out.cells()) families[c.truncate(up)].push_back(v);
    bool mergeable = true;
    for (const auto& [parent, values] : families) {
      mergeable = mergeable && values.size() == p &&
                  std::all_of(values.begin(), values.end(), [&](const Cyclotomic& v) { return v == values.front(); });
    }
    if (!mergeable) break;
    SchwartzFunction::Cells merged;
    for (const auto& [parent, values] : families) merged.emplace(parent, values.front());
    out = SchwartzFunction(p, up, merged);
  }
  return out;
}

SchwartzFunction schwartz_add(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_same_prime(f.prime(), g.prime());
  const long level = std::max(f.level(), g.level());
  auto cells = f.refine(level).cells();
  const auto gr = g.refine(level);
  for (const auto& [c, v] : gr.cells()) accumulate(cells, c, v);
  return SchwartzFunction(f.prime(), level, cells);
}

SchwartzFunction schwartz_scale(const SchwartzFunction& f, const Cyclotomic& c) {
  SchwartzFunction::Cells cells;
  if (!is_zero(c)) {
    for (const auto& [x, v] : f.cells()) cells.emplace(x, c * v);
  }
  return SchwartzFunction(f.prime(), f.level(), cells);
}

SchwartzFunction schwartz_mul(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_same_prime(f.prime(), g.prime());
  const long level = std::max(f.level(), g.level());
  const auto fr = f.refine(level);
  SchwartzFunction::Cells cells;
  const auto gr = g.refine(level);
  for (const auto& [c, v] : gr.cells()) {
    const auto it = fr.cells().find(c);
    if (it != fr.cells().end()) accumulate(cells, c, it->second * v);
  }
  return SchwartzFunction(f.prime(), level, cells);
}

SchwartzFunction schwartz_star(const SchwartzFunction& f) {
  SchwartzFunction::Cells cells;
  for (const auto& [x, v] : f.cells()) cells.emplace(x, conj(v));
  return SchwartzFunction(f.prime(), f.level(), cells);
}

Cyclotomic haar_integral(const SchwartzFunction& f) {
  Cyclotomic sum(0);
  for (const auto& [c, v] : f.cells()) sum += v;
  return sum * Cyclotomic(rpow(f.prime(), -f.level()));
}

Cyclotomic HaarMeasure::integrate(const SchwartzFunction& f) const { return Cyclotomic(scale) * haar_integral(f); }

HaarMeasure HaarMeasure::normalized_for(const SchwartzFunction& f) {
  const auto total = haar_integral(f);
  const auto r = total.rational_value();
  if (!r || sgn(*r) <= 0) throw PreconditionError("normalization needs a positive rational integral");
  return {Rational(1) / *r};
}

SchwartzFunction schwartz_convolve(const SchwartzFunction& f, const SchwartzFunction& g, const HaarMeasure& mu) {
  require_same_prime(f.prime(), g.prime());
  // The convolution is invariant under translation by p^L Z_p for the
  // coarser level L, so the finer factor may be replaced by its cell averages.
  const long level = std::min(f.level(), g.level());
  const auto fa = f.average(level);
  const auto ga = g.average(level);
  const Cyclotomic weight(mu.scale * rpow(f.prime(), -level));
  SchwartzFunction::Cells cells;
  for (const auto& [c1, v1] : fa.cells())
    for (const auto& [c2, v2] : ga.cells()) accumulate(cells, (c1 + c2).truncate(level), weight * v1 * v2);
  return SchwartzFunction(f.prime(), level, cells);
}

SchwartzFunction padic_fourier(const SchwartzFunction& f, const HaarMeasure& mu) {
  const unsigned p = f.prime();
  const long m = f.level();
  // chi(c, y) depends only on y modulo p^{-v(c)}.
  long out_level = -m;
  for (const auto& [c, v] : f.cells()) {
    if (const auto val = c.valuation()) out_level = std::max(out_level, -*val);
  }
  if (f.is_zero()) return SchwartzFunction(p, out_level);
  const Cyclotomic weight(mu.scale * rpow(p, -m));
  SchwartzFunction::Cells cells;
  for (const auto& y : cell_representatives(p, -m, out_level)) {
    Cyclotomic sum(0);
    for (const auto& [c, v] : f.cells()) sum += v * character_root(c, y).conjugate().value();
    if (!is_zero(sum)) cells.emplace(y, weight * sum);
  }
  return SchwartzFunction(p, out_level, cells);
}

std::optional<std::string> coproduct_condition_witness(const SchwartzFunction& f) {
  const auto [n, m] = f.window();
  const auto grid = cell_representatives(f.prime(), n - 1, m + 1);
  for (const auto& y : grid) {
    const auto fy = f(y);
    for (const auto& x : grid) {
      if (f(x + y) * fy != f(x) * fy) return "x=" + format_padic(x) + " y=" + format_padic(y);
    }
  }
  return std::nullopt;
}

std::optional<std::string> group_like_witness(const SchwartzFunction& f) {
  if (f.is_zero()) return std::string("zero function");
  if (schwartz_mul(f, f) != f) return std::string("not idempotent");
  if (schwartz_star(f) != f) return std::string("not self-adjoint");
  if (auto w = coproduct_condition_witness(f)) return "coproduct condition fails at " + *w;
  return std::nullopt;
}

SchwartzFunction schwartz_reflect(const SchwartzFunction& f) {
  SchwartzFunction::Cells cells;
  for (const auto& [c, v] : f.cells()) cells.emplace(negate(c, f.level()), v);
  return SchwartzFunction(f.prime(), f.level(), cells);
}

SchwartzFunction padic_inverse_fourier(const SchwartzFunction& g) { return schwartz_reflect(padic_fourier(g)); }

CheckReport padic_group_like_suite(const std::vector<long>& ns, unsigned p, const std::string& suite) {
  CheckReport report;
  const std::string prefix = "p=" + std::to_string(p) + ":";
  for (const long n : ns) {
    const std::string name = prefix + "n=" + std::to_string(n) + ":";
    const auto h = subgroup_indicator(p, n);
    {
      Stopwatch clock;
      report.record(suite, name + "group_like", group_like_witness(h), clock.elapsed_ms());
    }
    {
      Stopwatch clock;
      const auto expected = schwartz_scale(subgroup_indicator(p, -n), Cyclotomic(rpow(p, -n)));
      const auto got = padic_fourier(h);
      std::optional<std::string> witness;
      if (got != expected) witness = "F(h_n)=" + to_string(got);
      report.record(suite, name + "fourier", witness, clock.elapsed_ms());
    }
    {
      Stopwatch clock;
      const auto mu = HaarMeasure::normalized_for(h);
      const auto hat = padic_fourier(h, mu);
      std::optional<std::string> witness;
      if (hat != subgroup_indicator(p, -n)) {
        witness = "normalized F(h_n)=" + to_string(hat);
      } else if (auto w = group_like_witness(hat)) {
        witness = "normalized F(h_n): " + *w;
      }
      report.record(suite, name + "normalized_fourier_group_like", witness, clock.elapsed_ms());
    }
  }
  Stopwatch clock;
  const auto coset = indicator(Ball(PAdic(p, {{0, 1u}}), 1));
  std::optional<std::string> witness;
  if (!coproduct_condition_witness(coset)) witness = "coset indicator satisfies the coproduct condition";
  report.record(suite, prefix + "coset_rejected", witness, clock.elapsed_ms());
  return report;
}

SchwartzFunction random_schwartz(unsigned p, Rng& rng) {
  std::uniform_int_distribution<long> level_dist(-2, 2);
  const long m = level_dist(rng);
  std::uniform_int_distribution<long> low_dist(std::max(-2L, m - 2), m);
  const long n = low_dist(rng);
  unsigned long available = 1;
  for (long j = n; j < m; ++j) available *= p;
  std::uniform_int_distribution<unsigned long> count_dist(1, std::min(6UL, available));
  const unsigned long count = count_dist(rng);
  std::uniform_int_distribution<unsigned> digit(0, p - 1);
  SchwartzFunction::Cells cells;
  while (cells.size() < count) {
    std::map<long, unsigned> digits;
    for (long j = n; j < m; ++j) digits[j] = digit(rng);
    Cyclotomic v(0);
    while (is_zero(v)) v = random_small_scalar(rng);
    cells.emplace(PAdic(p, digits), v);
  }
  return SchwartzFunction(p, m, cells);
}

std::string to_string(const SchwartzFunction& f) {
  std::string out = "{p=" + std::to_string(f.prime()) + ", level=" + std::to_string(f.level()) + ", cells=[";
  bool first = true;
  for (const auto& [c, v] : f.cells()) {
    if (!first) out += "; ";
    first = false;
    out += format_padic(c) + " -> " + to_string(v);
  }
  return out + "]}";
}

}  // namespace aqg
