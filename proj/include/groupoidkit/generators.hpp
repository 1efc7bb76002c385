#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groupoidkit/group.hpp"
#include "groupoidkit/groupoid.hpp"

namespace gk {

// Built-in groups. The identity is always element 0.
FiniteGroup cyclic_group(int n);
FiniteGroup klein_group();      // e, s, t, st
FiniteGroup symmetric_group3(); // e, s, s2, t, ts, ts2 with s^3 = t^2 = e, st = ts^2
FiniteGroup alternating_group3();
FiniteGroup dihedral_group(int m);  // order 2m
FiniteGroup quaternion_group();
FiniteGroup alternating_group4();

/// Names accepted by library_group: C1..C12, klein, S3, A3, D4, D6, Q8, A4.
std::vector<std::string> library_group_names();
/// Throws std::invalid_argument for unknown names.
FiniteGroup library_group(const std::string& name);

/// Relabels the elements by a seeded permutation (identity no longer first),
/// giving an "unordered" presentation of the same group.
FiniteGroup shuffled(const FiniteGroup& g, std::uint64_t seed);

/// One representative per isomorphism class of abelian groups of order
/// <= max_order, as products of cyclic groups of prime-power order.
std::vector<FiniteGroup> abelian_groups_up_to(int max_order);

struct GroupAction {
  FiniteGroup group;
  std::vector<std::string> points;
  std::vector<int> act;  // act[g * points.size() + x]

  int apply(int g, int x) const { return act[static_cast<std::size_t>(g) * points.size() + x]; }
  /// Empty on success, otherwise the first violated action law.
  std::string check() const;
};

/// Left multiplication of `acting` (a subgroup of g) on the left cosets g/sub.
GroupAction coset_action(const FiniteGroup& g, const std::vector<int>& acting,
                         const std::vector<int>& sub);

/// Gamma ⋉ X: arrow (g, x) has source x and range g.x. Arrow (g, x) has
/// index g * |X| + x. Throws std::invalid_argument for an invalid action.
FiniteGroupoid transformation_groupoid(const GroupAction& a);

/// Disjoint union of one-object groupoids; arrow labels are "(g,unit)".
/// Throws std::invalid_argument for an invalid fiber table.
FiniteGroupoid group_bundle(const std::vector<std::pair<std::string, FiniteGroup>>& fibers);

FiniteGroupoid trivial_groupoid(int n);
/// Full equivalence relation on n points; units come first.
FiniteGroupoid pair_groupoid(int n);
FiniteGroupoid one_object(const FiniteGroup& g, const std::string& point = "*");

/// The Klein group acting on the five-point cross {c, x+, x-, y+, y-}: s
/// flips the x-arm, t flips the y-arm.
GroupAction klein_cross_action();
FiniteGroupoid klein_cross();
/// Fibers S3 over p and A3 over q.
FiniteGroupoid s3_a3_bundle();

/// Seed-deterministic disjoint union of transformation groupoids of random
/// subgroup actions of library groups (order <= 12) on coset spaces, with at
/// most `size_budget` arrows in total.
FiniteGroupoid random_groupoid(std::uint64_t seed, int size_budget);

/// Abelian group bundle over at most `max_points` points with fibers of
/// order <= 12.
FiniteGroupoid random_abelian_bundle(std::uint64_t seed, int max_points = 8);

/// Prefixes every label; used to keep labels unique in disjoint unions.
FiniteGroupoid relabel(const FiniteGroupoid& g, const std::string& prefix);

}  // namespace gk
