#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupoidkit/algebra.hpp"
#include "groupoidkit/document.hpp"

namespace gk {

// Each *_violation function returns nullopt when the property holds and a
// JSON witness describing the failure otherwise.

/// q^-1(units of G/H) == H.
std::optional<json> exactness_violation(const FiniteGroupoid& g, const NormalSubgroupoid& h);

/// ker Q ∩ span{delta_x} == {0}, by exact ranks.
std::optional<json> kernel_diagonal_violation(const HostPtr& g, const NormalSubgroupoid& h);

/// ker Q == {0} exactly when H is the unit space.
std::optional<json> injectivity_violation(const HostPtr& g, const NormalSubgroupoid& h);

/// Every character functional is a *-homomorphism, they are pairwise
/// distinct, and there are abelianization_dim(g) of them.
std::optional<json> character_count_violation(const HostPtr& g);

/// ker(pi) equals the commutator ideal as a subspace.
std::optional<json> pi_kernel_violation(const HostPtr& g);

/// For an abelian group bundle: the Gelfand matrix is invertible
/// (|det| > 1e-6) and turns convolution into pointwise products.
std::optional<json> gelfand_violation(const FiniteGroupoid& g);

/// |dual| == |A|, invariant factors survive dualization, and the double-dual
/// pairing is injective.
std::optional<json> duality_violation(const FiniteAbelianGroup& a);

inline constexpr double kDeterminantFloor = 1e-6;

struct CheckResult {
  enum class Status { kPass, kFail, kSkip };
  std::string name;
  Status status = Status::kPass;
  json witness;
  std::string note;
  double millis = 0.0;
};

const char* to_string(CheckResult::Status s);

struct CheckReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
  json to_json() const;
};

struct CheckOptions {
  /// Exactness/kernel checks enumerate normal subgroupoids only up to this size.
  std::size_t max_exact_arrows = 24;
  std::size_t max_normal_subgroupoids = 1u << 14;
};

/// The full invariant suite on one groupoid: validate, exactness,
/// kernel-diagonal, injectivity, character-count, pi-kernel, gelfand (on G^ab
/// and on g itself when it is an abelian bundle) and duality (fibers of G^ab).
CheckReport run_checks(const FiniteGroupoid& g, const std::string& subject,
                       const CheckOptions& options = {});

struct CorpusReport {
  std::uint64_t first_seed = 0;
  std::vector<CheckReport> instances;
  double millis = 0.0;

  bool ok() const;
  json to_json() const;
};

/// run_checks over random_groupoid(seed, budget) for seed in
/// [first_seed, first_seed + count), optionally on `jobs` threads.
CorpusReport run_corpus(std::uint64_t first_seed, std::size_t count, int budget, int jobs = 1,
                        const CheckOptions& options = {});

}  // namespace gk
