#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gk {

/// A finite group given by an explicit multiplication table.
///
/// Elements are the integers 0..order()-1; `labels` are only used for
/// display and serialization. The table is row-major:
/// `mul(a, b) == table[a * order() + b]`.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<std::string> labels, std::vector<int> table);

  std::size_t order() const noexcept { return labels_.size(); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int identity() const noexcept { return identity_; }
  int inv(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<int>& table() const noexcept { return table_; }

  bool is_abelian() const;
  int element_order(int a) const;
  int find(const std::string& label) const;  // -1 when absent

  /// Checks closure, associativity, identity and inverses. Empty string on
  /// success, otherwise a description of the first failure.
  std::string check_axioms() const;

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

/// Smallest subgroup containing `gens` (sorted element list).
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);

/// The commutator subgroup [g, g] (sorted element list).
std::vector<int> commutator_subgroup(const FiniteGroup& g);

/// Every subgroup, each a sorted element list; the list itself is sorted.
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g);

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& sub);

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g);

/// Re-indexes a subgroup as a group in its own right. `sub` must be sorted
/// and closed; element i of the result is sub[i].
FiniteGroup induced_group(const FiniteGroup& g, const std::vector<int>& sub);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace gk
