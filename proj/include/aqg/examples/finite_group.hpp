#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace aqg {

/// A finite group given by its Cayley table; validated on construction.
class FiniteGroupTable {
 public:
  /// table[g][h] is the index of g*h. Labels default to "g0", "g1", ...
  /// Throws InvalidGroupTable.
  FiniteGroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {},
                   std::string name = {});

  std::size_t order() const { return table_.size(); }
  std::size_t multiply(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  bool is_abelian() const;

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> labels_;
  std::string name_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

FiniteGroupTable cyclic_group(std::size_t n);
FiniteGroupTable klein_four_group();
FiniteGroupTable symmetric_group_s3();
FiniteGroupTable trivial_group();

/// Built-in tables by name: "Z2", "Z3", "Z4", "Z2xZ2", "S3", "trivial".
FiniteGroupTable builtin_group(const std::string& name);
const std::vector<std::string>& builtin_group_names();

/// All subgroups as sorted index sets, found by brute force over subsets.
std::vector<std::vector<std::size_t>> subgroups(const FiniteGroupTable& g);

}  // namespace aqg
