#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupoidkit/groupoid.hpp"

namespace gk {

/// Why a subset failed to be a normal subgroupoid. For conjugation failures
/// `conjugator` and `member` are the pair (alpha, h) with alpha h alpha^-1
/// outside the subset; otherwise `member` is the offending arrow.
struct NormalityWitness {
  enum class Reason { kMissingUnit, kNotIsotropy, kNotClosed, kNotConjugationInvariant };
  Reason reason;
  std::string message;
  Arrow conjugator = kNoArrow;
  Arrow member = kNoArrow;
};

struct NormalityCheck {
  std::optional<NormalityWitness> witness;
  explicit operator bool() const noexcept { return !witness.has_value(); }
};

NormalityCheck is_normal(const FiniteGroupoid& g, const ArrowSet& h);

/// A subset already checked to satisfy every normal-subgroupoid condition.
class NormalSubgroupoid {
 public:
  /// Throws GroupoidError carrying the witness arrows when `carrier` is not normal.
  NormalSubgroupoid(const FiniteGroupoid& host, ArrowSet carrier);

  const ArrowSet& carrier() const noexcept { return carrier_; }
  bool contains(Arrow a) const { return member_[a] != 0; }

 private:
  ArrowSet carrier_;
  std::vector<char> member_;
};

/// G/H together with the class map q : G -> G/H.
///
/// Each class is labelled by its smallest arrow index; quotient arrows are
/// ordered by that representative.
struct QuotientResult {
  FiniteGroupoid quotient;
  std::vector<Arrow> class_map;
  std::vector<Arrow> representatives;  // representatives[q] = smallest arrow in class q
};

QuotientResult quotient(const FiniteGroupoid& g, const NormalSubgroupoid& h);

/// {a | class_map(a) is a unit of the quotient}.
ArrowSet quotient_unit_preimage(const QuotientResult& q);

/// In the discrete model the interior of the isotropy is the isotropy itself.
NormalSubgroupoid interior_isotropy(const FiniteGroupoid& g);

/// Fiberwise commutator subgroups of a group bundle.
NormalSubgroupoid commutator_subgroupoid(const FiniteGroupoid& g);

/// Restriction of g to its fixed points, plus the inclusion into g.
struct FixedPart {
  FiniteGroupoid groupoid;
  std::vector<Arrow> inclusion;  // arrow i of groupoid is inclusion[i] in the host
};

FixedPart g_fix(const FiniteGroupoid& g);

/// G^ab = G_fix / [G_fix, G_fix].
struct Abelianization {
  FixedPart fixed;
  QuotientResult result;  // quotient of fixed.groupoid

  const FiniteGroupoid& groupoid() const noexcept { return result.quotient; }
};

Abelianization abelianize_groupoid(const FiniteGroupoid& g);

/// Every normal subgroupoid, enumerated per connected component: a normal
/// subgroup of the isotropy at the component's smallest unit, transported by
/// conjugation to the other units of the component. Stops after `limit`.
std::vector<ArrowSet> enumerate_normal_subgroupoids(const FiniteGroupoid& g,
                                                    std::size_t limit = 1u << 16);

/// Groupoid isomorphism test for an explicit arrow map f : a -> b.
bool is_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b, const std::vector<Arrow>& f);

/// Every fiber of a group bundle is commutative.
bool is_abelian_group_bundle(const FiniteGroupoid& g);

}  // namespace gk
