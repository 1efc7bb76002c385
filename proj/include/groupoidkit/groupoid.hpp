#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groupoidkit/group.hpp"

namespace gk {

/// Index of an arrow in a FiniteGroupoid.
using Arrow = int;
inline constexpr Arrow kNoArrow = -1;

/// Sorted, duplicate-free set of arrows of some host groupoid.
using ArrowSet = std::vector<Arrow>;

/// Raised when an operation's precondition on its groupoid arguments fails.
/// `witness` names the offending arrows, when there are any.
class GroupoidError : public std::runtime_error {
 public:
  GroupoidError(const std::string& what, std::vector<Arrow> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Arrow>& witness() const noexcept { return witness_; }

 private:
  std::vector<Arrow> witness_;
};

/// A finite (discrete) groupoid stored as explicit tables.
///
/// Composition is a dense n x n partial table: `comp(a, b)` is the product
/// "a after b", defined exactly when src(a) == rng(b), and kNoArrow
/// otherwise. The constructor only checks that the tables have consistent
/// sizes; the groupoid axioms are checked by validate().
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> labels, std::vector<Arrow> units,
                 std::vector<Arrow> src, std::vector<Arrow> rng, std::vector<Arrow> comp,
                 std::vector<Arrow> inv);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Arrow a) const { return labels_[a]; }
  std::optional<Arrow> find(const std::string& label) const;

  const ArrowSet& units() const noexcept { return units_; }
  bool is_unit(Arrow a) const { return is_unit_[a] != 0; }

  Arrow src(Arrow a) const { return src_[a]; }
  Arrow rng(Arrow a) const { return rng_[a]; }
  Arrow inv(Arrow a) const { return inv_[a]; }
  bool composable(Arrow a, Arrow b) const { return src_[a] == rng_[b]; }
  /// Product a*b, or kNoArrow when undefined.
  Arrow comp(Arrow a, Arrow b) const { return comp_[static_cast<std::size_t>(a) * size() + b]; }

  const std::vector<Arrow>& src_table() const noexcept { return src_; }
  const std::vector<Arrow>& rng_table() const noexcept { return rng_; }
  const std::vector<Arrow>& comp_table() const noexcept { return comp_; }
  const std::vector<Arrow>& inv_table() const noexcept { return inv_; }

  /// Arrows with source x (the set G_x of the convolution formula).
  ArrowSet arrows_from(Arrow x) const;
  /// Arrows with source and range x (the isotropy group at x).
  ArrowSet isotropy_at(Arrow x) const;

  bool operator==(const FiniteGroupoid&) const = default;

 private:
  std::vector<std::string> labels_;
  ArrowSet units_;
  std::vector<char> is_unit_;
  std::vector<Arrow> src_, rng_, comp_, inv_;
};

enum class ViolationKind {
  kMalformed,        // index out of range, unit set inconsistent
  kCompOnNonComposable,
  kMissingComposite,
  kUnitLaw,          // src(x) = rng(x) = x for units
  kIdentityLaw,      // a * src(a) = a = rng(a) * a
  kSourceRange,      // src/rng of a composite
  kAssociativity,
  kInverseLaw,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<Arrow> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Exhaustive check of the groupoid axioms. Malformed tables are reported as
/// kMalformed and suppress the remaining (meaningless) checks.
ValidationReport validate(const FiniteGroupoid& g);

ArrowSet isotropy(const FiniteGroupoid& g);

/// {a*b | a in u, b in v, src(a) = rng(b)}.
ArrowSet compose_sets(const FiniteGroupoid& g, const ArrowSet& u, const ArrowSet& v);

/// src and rng are both injective on s.
bool is_bisection(const FiniteGroupoid& g, const ArrowSet& s);

/// For a unit set f: first arrow with src in f and rng outside f, if any.
std::optional<Arrow> invariance_witness(const FiniteGroupoid& g, const ArrowSet& f);
bool is_invariant(const FiniteGroupoid& g, const ArrowSet& f);

ArrowSet fixed_points(const FiniteGroupoid& g);

/// Arrows {a | src(a) in f}, ascending. Arrow i of restrict(g, f) is
/// restriction_arrows(g, f)[i].
ArrowSet restriction_arrows(const FiniteGroupoid& g, const ArrowSet& f);

/// The restriction G_F to an invariant unit set. Throws GroupoidError with
/// a witness arrow when f is not invariant or contains non-units.
FiniteGroupoid restrict(const FiniteGroupoid& g, const ArrowSet& f);

bool is_effective(const FiniteGroupoid& g);
bool is_group_bundle(const FiniteGroupoid& g);

/// The isotropy group at unit x as a FiniteGroup; group element i is
/// isotropy_at(x)[i].
FiniteGroup fiber_group(const FiniteGroupoid& g, Arrow x);

/// Disjoint union; arrows of b are shifted by a.size().
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Builds a groupoid whose composition is given by a callable
/// `product(a, b)`, invoked only for composable pairs.
template <class Product>
FiniteGroupoid make_groupoid(std::vector<std::string> labels, std::vector<Arrow> units,
                             std::vector<Arrow> src, std::vector<Arrow> rng,
                             std::vector<Arrow> inv, Product product) {
  const std::size_t n = labels.size();
  std::vector<Arrow> comp(n * n, kNoArrow);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (src[a] == rng[b]) comp[a * n + b] = product(static_cast<Arrow>(a), static_cast<Arrow>(b));
  return FiniteGroupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                        std::move(comp), std::move(inv));
}

}  // namespace gk
