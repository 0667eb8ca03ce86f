#include "aqg/io/json.hpp"

#include <cctype>
#include <map>

#include "aqg/error.hpp"

namespace aqg::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError("expected an object", path);
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'", path);
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

long long integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError("expected an integer", path);
  if (j.is_number_unsigned() && j.get<unsigned long long>() > 0x7fffffffffffffffULL) {
    throw SchemaError("integer out of range", path);
  }
  return j.get<long long>();
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& path) {
  const long long v = integer_from_json(j, path);
  if (v < 0 || static_cast<unsigned long long>(v) >= bound) throw SchemaError("index out of range", path);
  return static_cast<std::size_t>(v);
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& a = field(j, key, path);
  if (!a.is_array()) throw SchemaError("expected an array", at(path, key));
  return a;
}

Json big_integer_to_json(const mpz_class& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

mpz_class big_integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(std::to_string(integer_from_json(j, path)));
  if (j.is_string()) {
    mpz_class out;
    const auto text = j.get<std::string>();
    if (text.empty() || out.set_str(text, 10) != 0) throw SchemaError("expected an integer", path);
    return out;
  }
  if (j.is_number()) throw SchemaError("floating point scalars are not allowed", path);
  throw SchemaError("expected an integer", path);
}

/// [num, den] in lowest terms.
Json rational_pair(const Rational& r) {
  return Json::array({big_integer_to_json(r.get_num()), big_integer_to_json(r.get_den())});
}

/// Integers stay bare; other rationals are [num, den].
Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return rational_pair(r);
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(integer_from_json(j, path)));
  if (j.is_number()) throw SchemaError("floating point scalars are not allowed", path);
  if (j.is_array()) {
    if (j.size() != 2) throw SchemaError("expected [num, den]", path);
    const auto num = big_integer_from_json(j[0], at(path, 0));
    const auto den = big_integer_from_json(j[1], at(path, 1));
    if (den <= 0) throw SchemaError("denominator must be positive", at(path, 1));
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  if (!j.is_string()) throw SchemaError("expected a rational", path);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(std::string("invalid rational: ") + e.what(), path);
  }
}

Json sparse_tensor_to_json(const Tensor3<Cyclotomic>& t, std::size_t d) {
  Json out = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (!is_zero(t(i, j, k))) out.push_back(Json::array({i, j, k, scalar_to_json(t(i, j, k))}));
      }
  return out;
}

Tensor3<Cyclotomic> sparse_tensor_from_json(const Json& j, std::size_t d, const std::string& path) {
  Tensor3<Cyclotomic> out(d);
  for (std::size_t n = 0; n < j.size(); ++n) {
    const Json& e = j[n];
    const auto p = at(path, n);
    if (!e.is_array() || e.size() != 4) throw SchemaError("expected [i, j, k, scalar]", p);
    const auto i = index_from_json(e[0], d, at(p, 0));
    const auto k1 = index_from_json(e[1], d, at(p, 1));
    const auto k2 = index_from_json(e[2], d, at(p, 2));
    out(i, k1, k2) += scalar_from_json(e[3], at(p, 3));
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

Json scalar_to_json(const Cyclotomic& x) {
  if (const auto r = x.rational_value()) return rational_to_json(*r);
  Json coeffs = Json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(rational_pair(c));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Cyclotomic scalar_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) return Cyclotomic(rational_from_json(j, path));
  const long long order = integer_from_json(field(j, "order", path), at(path, "order"));
  if (order < 1 || order > 100000) throw SchemaError("order out of range", at(path, "order"));
  const Json& cj = array_field(j, "coeffs", path);
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < cj.size(); ++i) coeffs.push_back(rational_from_json(cj[i], at(at(path, "coeffs"), i)));
  if (coeffs.size() != euler_phi(static_cast<unsigned>(order))) {
    throw SchemaError("expected " + std::to_string(euler_phi(static_cast<unsigned>(order))) + " coefficients",
                      at(path, "coeffs"));
  }
  return Cyclotomic::from_coefficients(static_cast<unsigned>(order), coeffs);
}

Json scalar_to_json(const ApproxComplex& x) { return Json{{"re", x.re}, {"im", x.im}}; }

std::vector<Cyclotomic> vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError("expected an array", path);
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar_from_json(j[i], at(path, i)));
  return out;
}

Json vector_to_json(const std::vector<Cyclotomic>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Json matrix_to_json(const Matrix<Cyclotomic>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix<Cyclotomic> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) throw SchemaError("expected " + std::to_string(rows) + " rows", path);
  Matrix<Cyclotomic> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = vector_from_json(j[i], at(path, i));
    if (row.size() != cols) throw SchemaError("expected " + std::to_string(cols) + " columns", at(path, i));
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = row[k];
  }
  return out;
}

Json quantum_group_to_json(const QuantumGroupData<Cyclotomic>& a) {
  const std::size_t d = a.dim();
  Json out;
  out["name"] = a.name;
  out["dim"] = d;
  out["labels"] = a.labels;
  out["mult"] = sparse_tensor_to_json(a.mult, d);
  out["comult"] = sparse_tensor_to_json(a.comult, d);
  out["counit"] = vector_to_json(a.counit);
  out["antipode"] = matrix_to_json(a.antipode);
  out["star"] = a.star ? matrix_to_json(*a.star) : Json(nullptr);
  out["unit"] = a.unit ? vector_to_json(*a.unit) : Json(nullptr);
  out["phi"] = vector_to_json(a.left_integral);
  out["psi"] = vector_to_json(a.right_integral);
  return out;
}

QuantumGroupData<Cyclotomic> quantum_group_from_json(const Json& j) {
  const std::string root;
  const long long dim = integer_from_json(field(j, "dim", root), "/dim");
  if (dim < 1 || dim > 256) throw SchemaError("dim must be between 1 and 256", "/dim");
  const auto d = static_cast<std::size_t>(dim);
  QuantumGroupData<Cyclotomic> out;
  out.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "quantum_group";
  if (const Json* labels = optional_field(j, "labels")) {
    if (!labels->is_array() || labels->size() != d) throw SchemaError("expected dim labels", "/labels");
    for (std::size_t i = 0; i < d; ++i) {
      if (!(*labels)[i].is_string()) throw SchemaError("expected a string", at("/labels", i));
      out.labels.push_back((*labels)[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) out.labels.push_back("a" + std::to_string(i));
  }
  out.mult = sparse_tensor_from_json(array_field(j, "mult", root), d, "/mult");
  out.comult = sparse_tensor_from_json(array_field(j, "comult", root), d, "/comult");
  auto sized = [&](const char* key) {
    auto v = vector_from_json(field(j, key, root), std::string("/") + key);
    if (v.size() != d) throw SchemaError("expected " + std::to_string(d) + " entries", std::string("/") + key);
    return v;
  };
  out.counit = sized("counit");
  out.antipode = matrix_from_json(field(j, "antipode", root), d, d, "/antipode");
  if (const Json* star = optional_field(j, "star")) out.star = matrix_from_json(*star, d, d, "/star");
  if (optional_field(j, "unit")) out.unit = sized("unit");
  out.left_integral = sized("phi");
  out.right_integral = sized("psi");
  return out;
}

Json group_table_to_json(const FiniteGroupTable& g) {
  return Json{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

FiniteGroupTable group_table_from_json(const Json& j) {
  const long long order = integer_from_json(field(j, "order", ""), "/order");
  if (order < 1 || order > 256) throw SchemaError("order must be between 1 and 256", "/order");
  const auto n = static_cast<std::size_t>(order);
  const Json& t = array_field(j, "table", "");
  if (t.size() != n) throw SchemaError("expected " + std::to_string(n) + " rows", "/table");
  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!t[i].is_array() || t[i].size() != n) throw SchemaError("expected " + std::to_string(n) + " entries", at("/table", i));
    for (std::size_t k = 0; k < n; ++k) table[i].push_back(index_from_json(t[i][k], n, at(at("/table", i), k)));
  }
  std::vector<std::string> labels;
  if (const Json* lj = optional_field(j, "labels")) {
    if (!lj->is_array() || lj->size() != n) throw SchemaError("expected order labels", "/labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*lj)[i].is_string()) throw SchemaError("expected a string", at("/labels", i));
      labels.push_back((*lj)[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "G";
  return FiniteGroupTable(std::move(table), std::move(labels), name);
}

Json coords_to_json(const std::string& owner, const std::string& kind, const std::vector<Cyclotomic>& coords) {
  return Json{{"owner", owner}, {"kind", kind}, {"coords", vector_to_json(coords)}};
}

CoordsRecord coords_from_json(const Json& j) {
  CoordsRecord out;
  const Json& owner = field(j, "owner", "");
  if (!owner.is_string()) throw SchemaError("expected a string", "/owner");
  out.owner = owner.get<std::string>();
  const Json& kind = field(j, "kind", "");
  if (!kind.is_string() || (kind != "element" && kind != "functional")) {
    throw SchemaError("kind must be 'element' or 'functional'", "/kind");
  }
  out.kind = kind.get<std::string>();
  out.coords = vector_from_json(field(j, "coords", ""), "/coords");
  return out;
}

Json schwartz_to_json(const SchwartzFunction& f) {
  Json cells = Json::array();
  for (const auto& [c, v] : f.cells()) cells.push_back(Json{{"center", format_padic(c)}, {"value", scalar_to_json(v)}});
  return Json{{"p", f.prime()}, {"level", f.level()}, {"cells", cells}};
}

SchwartzFunction schwartz_from_json(const Json& j) {
  const long long p = integer_from_json(field(j, "p", ""), "/p");
  if (p < 2 || p > 1000) throw SchemaError("prime out of range", "/p");
  const auto prime = static_cast<unsigned>(p);
  try {
    require_prime(prime);
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what(), "/p");
  }
  const long long level = integer_from_json(field(j, "level", ""), "/level");
  if (level < -64 || level > 64) throw SchemaError("level out of range", "/level");
  const Json& cells = array_field(j, "cells", "");
  SchwartzFunction::Cells out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto path = at("/cells", i);
    const Json& center = field(cells[i], "center", path);
    if (!center.is_string()) throw SchemaError("expected a p-adic literal", at(path, "center"));
    PAdic c(prime);
    try {
      c = parse_padic(center.get<std::string>(), prime);
    } catch (const ParseError& e) {
      throw SchemaError(e.what(), at(path, "center"));
    }
    if (c.truncate(static_cast<long>(level)) != c) throw SchemaError("center is not reduced modulo p^level", at(path, "center"));
    if (out.count(c)) throw SchemaError("duplicate cell", at(path, "center"));
    out.emplace(c, scalar_from_json(field(cells[i], "value", path), at(path, "value")));
  }
  return SchwartzFunction(prime, static_cast<long>(level), out);
}

Json record_to_json(const CheckRecord& r, bool timing) {
  Json out{{"suite", r.suite}, {"case", r.case_name}, {"status", to_string(r.status)}};
  if (r.witness) out["witness"] = *r.witness;
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

Summary summarize(const CheckReport& r, unsigned long long seed, const std::string& backend) {
  return {r.records().size(), r.passed(), r.failed(), r.skipped(), seed, backend};
}

Json summary_to_json(const Summary& s) {
  return Json{{"summary",
               {{"total", s.total},
                {"passed", s.passed},
                {"failed", s.failed},
                {"skipped", s.skipped},
                {"seed", s.seed},
                {"backend", s.backend}}}};
}

SparseElement parse_sparse_element(std::string_view text) {
  std::optional<PairSide> side;
  std::map<long, Cyclotomic> support;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (;;) {
    skip_ws();
    const std::size_t term_start = pos;
    Rational coeff(1);
    const std::size_t star = text.find('*', pos);
    const std::size_t plus = text.find('+', pos);
    if (star != std::string_view::npos && (plus == std::string_view::npos || star < plus)) {
      std::string_view c = text.substr(pos, star - pos);
      while (!c.empty() && std::isspace(static_cast<unsigned char>(c.back()))) c.remove_suffix(1);
      try {
        coeff = parse_rational(c);
      } catch (const ParseError& e) {
        throw ParseError("invalid coefficient", term_start + e.position());
      }
      pos = star + 1;
      skip_ws();
    }
    PairSide term_side;
    if (text.substr(pos, 6) == "delta_") {
      term_side = PairSide::KZ;
      pos += 6;
    } else if (text.substr(pos, 2) == "e_") {
      term_side = PairSide::CZ;
      pos += 2;
    } else {
      throw ParseError("expected 'e_n' or 'delta_n'", pos);
    }
    if (side && *side != term_side) throw ParseError("terms mix e_n and delta_n", term_start);
    side = term_side;
    const std::size_t num_start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start || pos - digits_start > 15) throw ParseError("expected an index", num_start);
    const long n = std::stol(std::string(text.substr(num_start, pos - num_start)));
    support[n] += Cyclotomic(coeff);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+'", pos);
    ++pos;
  }
  return SparseElement(*side, support);
}

}  // namespace aqg::io
