// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "groupoidkit/checks.hpp"
#include "groupoidkit/commands.hpp"
#include "groupoidkit/generators.hpp"

using namespace gk;

namespace {

constexpr std::uint64_t kSeeds = 200;
constexpr int kBudget = 60;
constexpr std::size_t kExactArrows = 24;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<FiniteGroupoid>& corpus() {
  static const std::vector<FiniteGroupoid> instances = [] {
    std::vector<FiniteGroupoid> out;
    for (std::uint64_t s = 0; s < kSeeds; ++s) out.push_back(random_groupoid(s, kBudget));
    return out;
  }();
  return instances;
}

// Every (G, H) with |G| <= 24 and H an enumerated normal subgroupoid.
template <class Body>
std::size_t for_each_pair(Outcome& out, Body body) {
  std::size_t pairs = 0;
  for (std::uint64_t s = 0; s < kSeeds && out.pass; ++s) {
    const FiniteGroupoid& g = corpus()[s];
    if (g.size() > kExactArrows) continue;
    const HostPtr host = share(g);
    for (const auto& carrier : enumerate_normal_subgroupoids(g)) {
      ++pairs;
      if (auto w = body(host, NormalSubgroupoid(g, carrier))) {
        out.fail("seed " + std::to_string(s) + ": " + w->dump());
        break;
      }
    }
  }
  return pairs;
}

Outcome axiom_suite() {
  const auto start = Clock::now();
  Outcome out;
  std::size_t valid = 0;
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    const FiniteGroupoid g = random_groupoid(s, kBudget);
    if (g.size() > static_cast<std::size_t>(kBudget)) out.fail("seed " + std::to_string(s) + " exceeds the budget");
    if (validate(g).ok())
      ++valid;
    else
      out.fail("seed " + std::to_string(s) + " fails validate");
  }
  const double secs = seconds_since(start);
  if (secs >= 10.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.pass) out.detail = std::to_string(valid) + "/" + std::to_string(kSeeds) + " valid in " + std::to_string(secs) + " s";
  return out;
}

Outcome exactness() {
  Outcome out;
  const std::size_t pairs = for_each_pair(out, [](const HostPtr& g, const NormalSubgroupoid& h) {
    return exactness_violation(*g, h);
  });
  if (out.pass) out.detail = std::to_string(pairs) + " (G, H) pairs";
  return out;
}

Outcome kernel_diagonal() {
  Outcome out;
  const std::size_t pairs = for_each_pair(out, kernel_diagonal_violation);
  if (out.pass) out.detail = std::to_string(pairs) + " (G, H) pairs";
  return out;
}

Outcome injectivity() {
  Outcome out;
  std::size_t unit_space = 0;
  const std::size_t pairs = for_each_pair(out, [&](const HostPtr& g, const NormalSubgroupoid& h) {
    unit_space += h.carrier() == g->units();
    return injectivity_violation(g, h);
  });
  if (out.pass)
    out.detail = std::to_string(pairs) + " pairs, " + std::to_string(unit_space) + " with H = units";
  return out;
}

Outcome character_classification() {
  Outcome out;
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < kSeeds && out.pass; ++s) {
    const HostPtr g = share(corpus()[s]);
    if (auto w = character_count_violation(g)) out.fail("seed " + std::to_string(s) + " count: " + w->dump());
    if (auto w = pi_kernel_violation(g)) out.fail("seed " + std::to_string(s) + " pi kernel: " + w->dump());
    total += abelianization_dim(g);
  }
  if (out.pass) out.detail = std::to_string(kSeeds) + " groupoids, " + std::to_string(total) + " characters";
  return out;
}

Outcome named_regressions() {
  Outcome out;
  const auto dim = [](const FiniteGroupoid& g) { return abelianization_dim(share(g)); };
  if (const auto d = dim(one_object(symmetric_group3())); d != 2) out.fail("S3 dim " + std::to_string(d));
  if (const auto d = dim(s3_a3_bundle()); d != 5) out.fail("S3+A3 dim " + std::to_string(d));

  const HostPtr k = share(klein_cross());
  const auto chars = enumerate_characters(k);
  if (chars.size() != 4) out.fail("Klein cross has " + std::to_string(chars.size()) + " characters");
  const Arrow center = *k->find("(e,c)");
  for (const auto& phi : chars) {
    if (phi.x != center) out.fail("Klein cross character at " + k->label(phi.x));
    for (Arrow a = 0; a < static_cast<Arrow>(k->size()); ++a)
      if (phi.values[a] && !(k->src(a) == center && k->rng(a) == center))
        out.fail("Klein cross character supported off the center at " + k->label(a));
  }
  if (const auto n = enumerate_characters(share(pair_groupoid(2))).size(); n != 0)
    out.fail("pair groupoid has " + std::to_string(n) + " characters");
  if (out.pass) out.detail = "S3 -> 2, S3+A3 -> 5, Klein cross -> 4 at c, pair -> 0";
  return out;
}

Outcome gelfand() {
  Outcome out;
  double min_det = INFINITY;
  const std::uint64_t bundles = 100;
  for (std::uint64_t s = 0; s < bundles && out.pass; ++s) {
    const FiniteGroupoid g = random_abelian_bundle(s, 8);
    if (auto w = gelfand_violation(g)) out.fail("bundle seed " + std::to_string(s) + ": " + w->dump());
    min_det = std::min(min_det, std::abs(determinant(gelfand_transform(g).to_complex())));
  }
  if (out.pass) out.detail = std::to_string(bundles) + " bundles, min |det| " + std::to_string(min_det);
  return out;
}

Outcome duality() {
  Outcome out;
  std::uint64_t seed = 0;
  std::size_t groups = 0;
  for (const auto& g : abelian_groups_up_to(64)) {
    const FiniteAbelianGroup a(shuffled(g, seed++));
    ++groups;
    if (auto w = duality_violation(a)) out.fail("order " + std::to_string(a.order()) + ": " + w->dump());
  }
  if (out.pass) out.detail = std::to_string(groups) + " abelian groups of order <= 64";
  return out;
}

Outcome runtime_budget() {
  Outcome out;
  const auto start = Clock::now();
  std::ostringstream sink;
  const int code = cli::cmd_check_corpus(0, kSeeds, kBudget, 1, CheckOptions{}, sink);
  const double secs = seconds_since(start);
  if (code != cli::kOk) out.fail("corpus check exit code " + std::to_string(code));
  if (secs >= 300.0) out.fail("took " + std::to_string(secs) + " s");
  if (out.pass) out.detail = std::to_string(kSeeds) + " instances in " + std::to_string(secs) + " s";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 axiom suite", axiom_suite},
      {"2 exactness", exactness},
      {"3 kernel meets diagonal trivially", kernel_diagonal},
      {"4 injectivity criterion", injectivity},
      {"5 character classification", character_classification},
      {"6 named regressions", named_regressions},
      {"7 Gelfand transform", gelfand},
      {"8 duality", duality},
      {"9 runtime budget", runtime_budget},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
