#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqg/core/quantum_group.hpp"
#include "aqg/core/report.hpp"
#include "aqg/examples/finite_group.hpp"
#include "aqg/examples/laurent_pair.hpp"
#include "aqg/padic/schwartz.hpp"

namespace aqg::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);

/// Integers as numbers, other rationals as [num, den], irrational values as
/// {"order": N, "coeffs": [[num, den], ...]} with phi(N) coefficients.
/// Reading also accepts "p/q" strings and non-reduced pairs.
Json scalar_to_json(const Cyclotomic& x);
Cyclotomic scalar_from_json(const Json& j, const std::string& path = "");

Json scalar_to_json(const ApproxComplex& x);

std::vector<Cyclotomic> vector_from_json(const Json& j, const std::string& path = "");
Json vector_to_json(const std::vector<Cyclotomic>& v);
Json matrix_to_json(const Matrix<Cyclotomic>& m);
Matrix<Cyclotomic> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& path = "");

/// {name, dim, labels, mult, comult, counit, antipode, star, unit, phi, psi};
/// mult and comult are sparse [i, j, k, scalar] entries.
Json quantum_group_to_json(const QuantumGroupData<Cyclotomic>& a);
QuantumGroupData<Cyclotomic> quantum_group_from_json(const Json& j);

/// {order, table, labels, name}
Json group_table_to_json(const FiniteGroupTable& g);
FiniteGroupTable group_table_from_json(const Json& j);

/// {owner, kind, coords} with kind "element" or "functional".
Json coords_to_json(const std::string& owner, const std::string& kind, const std::vector<Cyclotomic>& coords);

struct CoordsRecord {
  std::string owner;
  std::string kind;
  std::vector<Cyclotomic> coords;
};

CoordsRecord coords_from_json(const Json& j);

/// {p, level, cells: [{center, value}]} with centers as p-adic literal text.
Json schwartz_to_json(const SchwartzFunction& f);
SchwartzFunction schwartz_from_json(const Json& j);

/// {suite, case, status, witness?, elapsed_ms?}
Json record_to_json(const CheckRecord& r, bool timing);

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  unsigned long long seed = 0;
  std::string backend;
};

Summary summarize(const CheckReport& r, unsigned long long seed, const std::string& backend);
Json summary_to_json(const Summary& s);

/// Literal such as "e_3", "delta_-2" or "2*e_1 + e_0"; all terms on one side.
SparseElement parse_sparse_element(std::string_view text);

}  // namespace aqg::io
