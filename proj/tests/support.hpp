#pragma once

#include <random>
#include <string>
#include <vector>

#include "groupoidkit/algebra.hpp"
#include "groupoidkit/generators.hpp"
#include "groupoidkit/groupoid.hpp"

namespace gk::test {

/// Z/2 = {e, g} as a one-object groupoid; e is arrow 0, g is arrow 1.
inline FiniteGroupoid z2() {
  const FiniteGroupoid g = one_object(FiniteGroup({"e", "g"}, {0, 1, 1, 0}));
  return FiniteGroupoid({"e", "g"}, g.units(), g.src_table(), g.rng_table(), g.comp_table(), g.inv_table());
}

inline FiniteGroupoid s3() { return one_object(symmetric_group3()); }

inline Arrow arrow(const FiniteGroupoid& g, const std::string& label) {
  auto a = g.find(label);
  if (!a) throw std::invalid_argument("no arrow '" + label + "'");
  return *a;
}

inline ArrowSet arrows(const FiniteGroupoid& g, const std::vector<std::string>& labels) {
  ArrowSet out;
  for (const auto& l : labels) out.push_back(arrow(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

/// Corpus instances with at most `max_arrows` arrows, from the first `seeds` seeds.
inline std::vector<FiniteGroupoid> small_corpus(std::size_t max_arrows, std::uint64_t seeds = 60,
                                                int budget = 24) {
  std::vector<FiniteGroupoid> out;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    auto g = random_groupoid(s, budget);
    if (g.size() <= max_arrows) out.push_back(std::move(g));
  }
  return out;
}

/// Sparse random element with small integer Gaussian coefficients.
inline AlgebraElement random_element(const HostPtr& host, std::mt19937_64& rng, int nonzeros = 3) {
  Vector v(host->size());
  if (host->empty()) return {host, v};
  for (int k = 0; k < nonzeros; ++k) {
    const auto a = static_cast<std::size_t>(rng() % host->size());
    v[a] += GaussianRational(mpq_class(static_cast<long>(rng() % 7) - 3),
                             mpq_class(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3)));
  }
  return {host, v};
}

}  // namespace gk::test
