#include "aqg/examples/finite_group.hpp"

#include <algorithm>
#include <array>

#include "aqg/error.hpp"

namespace aqg {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels,
                                   std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidGroupTable("group table is empty");
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[g].size() != n) throw InvalidGroupTable("row " + std::to_string(g) + " has wrong length");
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g][h] >= n) throw InvalidGroupTable("entry out of range at (" + std::to_string(g) + "," + std::to_string(h) + ")");
    }
  }
  if (labels_.empty()) {
    for (std::size_t g = 0; g < n; ++g) labels_.push_back("g" + std::to_string(g));
  }
  if (labels_.size() != n) throw InvalidGroupTable("label count does not match order");
  if (name_.empty()) name_ = "G" + std::to_string(n);

  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        if (table_[table_[g][h]][k] != table_[g][table_[h][k]]) {
          throw InvalidGroupTable("not associative at (" + std::to_string(g) + "," + std::to_string(h) + "," +
                                  std::to_string(k) + ")");
        }
      }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroupTable("no identity element");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
    }
    if (inverse_[g] == n) throw InvalidGroupTable("element " + labels_[g] + " has no inverse");
  }
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t g = 0; g < order(); ++g)
    for (std::size_t h = 0; h < order(); ++h) {
      if (table_[g][h] != table_[h][g]) return false;
    }
  return true;
}

FiniteGroupTable cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g) {
    labels.push_back(std::to_string(g));
    for (std::size_t h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  }
  return FiniteGroupTable(std::move(t), std::move(labels), "Z" + std::to_string(n));
}

FiniteGroupTable klein_four_group() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) t[g][h] = g ^ h;
  return FiniteGroupTable(std::move(t), {"(0,0)", "(1,0)", "(0,1)", "(1,1)"}, "Z2xZ2");
}

FiniteGroupTable symmetric_group_s3() {
  // Permutations of {0,1,2} as images; product is composition (g*h)(x) = g(h(x)).
  const std::array<std::array<std::size_t, 3>, 6> perms{{
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  const std::vector<std::string> labels{"e", "(012)", "(021)", "(01)", "(12)", "(02)"};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> composed{};
      for (std::size_t x = 0; x < 3; ++x) composed[x] = perms[g][perms[h][x]];
      t[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), composed) - perms.begin());
    }
  return FiniteGroupTable(std::move(t), labels, "S3");
}

FiniteGroupTable trivial_group() { return FiniteGroupTable({{0}}, {"e"}, "trivial"); }

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names{"Z2", "Z3", "Z4", "Z2xZ2", "S3", "trivial"};
  return names;
}

FiniteGroupTable builtin_group(const std::string& name) {
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z2xZ2") return klein_four_group();
  if (name == "S3") return symmetric_group_s3();
  if (name == "trivial") return trivial_group();
  throw PreconditionError("unknown builtin group '" + name + "'");
}

std::vector<std::vector<std::size_t>> subgroups(const FiniteGroupTable& g) {
  const std::size_t n = g.order();
  if (n > 20) throw PreconditionError("subgroup enumeration is brute force; order too large");
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (!(mask >> g.identity() & 1UL)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1UL)) continue;
      for (std::size_t b = 0; b < n && closed; ++b) {
        if (mask >> b & 1UL) closed = mask >> g.multiply(a, b) & 1UL;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1UL) members.push_back(a);
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace aqg
