#pragma once

#include <cstdint>
#include <vector>

#include "groupoidkit/group.hpp"
#include "groupoidkit/groupoid.hpp"

namespace gk {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// D = U * A * V with U, V unimodular and D diagonal, d1 | d2 | ...
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix v_inv;

  std::vector<std::int64_t> diagonal() const;
};

/// Smith normal form by elementary row/column operations, always pivoting on
/// the entry of smallest absolute value.
SmithForm smith_normal_form(IntMatrix a);

/// A ≅ Z/n1 x ... x Z/nk with n1 | n2 | ... | nk and every ni > 1.
struct InvariantFactors {
  std::vector<std::int64_t> factors;
  /// generators[j] has order factors[j]; together they realize the product.
  std::vector<int> generators;
  /// coordinates[a][j] in [0, factors[j]): a = prod_j generators[j]^coordinates[a][j].
  std::vector<std::vector<std::int64_t>> coordinates;
};

class FiniteAbelianGroup {
 public:
  /// Throws GroupoidError when `g` is not a commutative group.
  explicit FiniteAbelianGroup(FiniteGroup g);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return group_.order(); }
  int identity() const noexcept { return group_.identity(); }
  int op(int a, int b) const { return group_.mul(a, b); }
  /// lcm of the element orders.
  std::int64_t exponent() const noexcept { return exponent_; }
  const InvariantFactors& structure() const noexcept { return structure_; }

 private:
  FiniteGroup group_;
  std::int64_t exponent_ = 1;
  InvariantFactors structure_;
};

/// Invariant factors via the Smith normal form of the relation matrix of a
/// small generating set (Schreier relations read off a Cayley-graph BFS).
InvariantFactors invariant_factors(const FiniteGroup& g);

inline const std::vector<std::int64_t>& invariant_factors(const FiniteAbelianGroup& a) {
  return a.structure().factors;
}

/// A homomorphism A -> T, stored as exponents of exp(2 pi i / modulus).
struct Character {
  std::vector<std::int64_t> residues;  // one residue mod n_j per invariant factor
  std::vector<std::int64_t> exps;      // exps[a] in [0, modulus)
  std::int64_t modulus = 1;            // exponent of the host group

  bool operator==(const Character&) const = default;
};

std::vector<Character> characters(const FiniteAbelianGroup& a);

/// Exhaustive check of the homomorphism law on exponents.
bool is_character(const FiniteAbelianGroup& a, const Character& chi);

/// The dual group under pointwise addition of exponents. Throws
/// GroupoidError when `fiber` is not closed (i.e. not a complete dual).
FiniteAbelianGroup char_group_structure(const std::vector<Character>& fiber);

struct DualFiber {
  Arrow unit;
  ArrowSet arrows;                 // isotropy at unit; group element i is arrows[i]
  FiniteAbelianGroup group;
  std::vector<Character> characters;
};

struct DualBundle {
  std::vector<DualFiber> fibers;

  std::size_t total_size() const;
};

/// Throws GroupoidError naming the unit when a fiber is non-abelian, or when
/// the input is not a group bundle.
DualBundle dual_bundle(const FiniteGroupoid& g);

}  // namespace gk
