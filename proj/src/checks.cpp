#include "groupoidkit/checks.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <thread>

#include "groupoidkit/generators.hpp"

namespace gk {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json labels_json(const FiniteGroupoid& g, const ArrowSet& s) { return labels_of(g, s); }

}  // namespace

std::optional<json> exactness_violation(const FiniteGroupoid& g, const NormalSubgroupoid& h) {
  const QuotientResult q = quotient(g, h);
  const ArrowSet pre = quotient_unit_preimage(q);
  if (pre == h.carrier()) return std::nullopt;
  return json{{"subgroupoid", labels_json(g, h.carrier())}, {"unit_preimage", labels_json(g, pre)}};
}

std::optional<json> kernel_diagonal_violation(const HostPtr& g, const NormalSubgroupoid& h) {
  const Matrix ker = quotient_hom(g, h).kernel();
  const std::size_t common = intersection_dim(ker, diagonal_basis(*g), g->size());
  if (common == 0) return std::nullopt;
  return json{{"subgroupoid", labels_json(*g, h.carrier())},
              {"kernel_dim", ker.size()},
              {"intersection_dim", common}};
}

std::optional<json> injectivity_violation(const HostPtr& g, const NormalSubgroupoid& h) {
  const std::size_t kernel_dim = quotient_hom(g, h).kernel().size();
  const bool trivial_h = h.carrier() == g->units();
  if ((kernel_dim == 0) == trivial_h) return std::nullopt;
  return json{{"subgroupoid", labels_json(*g, h.carrier())},
              {"kernel_dim", kernel_dim},
              {"subgroupoid_is_unit_space", trivial_h}};
}

std::optional<json> character_count_violation(const HostPtr& g) {
  const auto functionals = enumerate_characters(g);
  for (const auto& phi : functionals)
    if (auto err = functional_violation(phi))
      return json{{"functional", encode(phi)}, {"problem", *err}};
  for (std::size_t i = 0; i < functionals.size(); ++i)
    for (std::size_t j = i + 1; j < functionals.size(); ++j)
      if (functionals[i].values == functionals[j].values)
        return json{{"duplicate", {encode(functionals[i]), encode(functionals[j])}}};
  const std::size_t dim = abelianization_dim(g);
  if (functionals.size() == dim) return std::nullopt;
  return json{{"characters", functionals.size()}, {"abelianization_dim", dim}};
}

std::optional<json> pi_kernel_violation(const HostPtr& g) {
  const AlgebraHom pi = abelianization_hom(g);
  if (auto err = hom_violation(pi)) return json{{"pi_not_a_homomorphism", *err}};
  const Matrix ker = pi.kernel();
  const IdealBasis ideal = commutator_ideal(g);
  if (same_span(ker, ideal.rows(), g->size())) return std::nullopt;
  return json{{"kernel_dim", ker.size()},
              {"commutator_ideal_dim", ideal.dim()},
              {"intersection_dim", intersection_dim(ker, ideal.rows(), g->size())}};
}

std::optional<json> gelfand_violation(const FiniteGroupoid& g) {
  const GelfandMatrix m = gelfand_transform(g);
  if (m.entries.size() != g.size())
    return json{{"rows", m.entries.size()}, {"columns", g.size()}, {"problem", "matrix is not square"}};
  const double det = std::abs(determinant(m.to_complex()));
  if (!(det > kDeterminantFloor)) return json{{"abs_determinant", det}};
  if (auto err = gelfand_multiplicativity_violation(g, m)) return json{{"problem", *err}};
  return std::nullopt;
}

std::optional<json> duality_violation(const FiniteAbelianGroup& a) {
  const auto chars = characters(a);
  if (chars.size() != a.order())
    return json{{"order", a.order()}, {"characters", chars.size()}};
  for (const auto& chi : chars)
    if (!is_character(a, chi)) return json{{"not_a_character", chi.residues}};
  const FiniteAbelianGroup dual = char_group_structure(chars);
  if (invariant_factors(dual) != invariant_factors(a))
    return json{{"factors", invariant_factors(a)}, {"dual_factors", invariant_factors(dual)}};

  // a -> (chi -> chi(a)) lands in the dual of the dual and is injective.
  std::set<std::vector<std::int64_t>> images;
  for (std::size_t x = 0; x < a.order(); ++x) {
    Character eval;
    eval.modulus = dual.exponent();
    for (const auto& chi : chars) eval.exps.push_back(chi.exps[x] * (dual.exponent() / chi.modulus));
    if (!is_character(dual, eval)) return json{{"pairing_not_a_character_at", x}};
    if (!images.insert(eval.exps).second) return json{{"pairing_not_injective_at", x}};
  }
  return std::nullopt;
}

const char* to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::kPass: return "pass";
    case CheckResult::Status::kFail: return "fail";
    case CheckResult::Status::kSkip: return "skip";
  }
  return "unknown";
}

bool CheckReport::ok() const {
  for (const auto& c : checks)
    if (c.status == CheckResult::Status::kFail) return false;
  return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json CheckReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) {
    json j{{"name", c.name}, {"status", to_string(c.status)}, {"millis", c.millis}};
    if (!c.note.empty()) j["note"] = c.note;
    if (c.status == CheckResult::Status::kFail) j["witness"] = c.witness;
    cs.push_back(std::move(j));
  }
  return {{"subject", subject}, {"status", ok() ? "pass" : "fail"}, {"checks", std::move(cs)}};
}

CheckReport run_checks(const FiniteGroupoid& g, const std::string& subject, const CheckOptions& options) {
  using Status = CheckResult::Status;
  CheckReport report{subject, {}};
  auto run = [&report](const std::string& name, const std::function<std::optional<json>()>& body,
                       std::string note = {}) {
    const auto start = Clock::now();
    CheckResult r{name, Status::kPass, nullptr, std::move(note), 0.0};
    try {
      if (auto w = body()) {
        r.status = Status::kFail;
        r.witness = std::move(*w);
      }
    } catch (const std::exception& e) {
      r.status = Status::kFail;
      r.witness = json{{"exception", e.what()}};
    }
    r.millis = millis_since(start);
    report.checks.push_back(std::move(r));
  };
  auto skip = [&report](const std::string& name, std::string why) {
    report.checks.push_back({name, Status::kSkip, nullptr, std::move(why), 0.0});
  };

  static const std::vector<std::string> kAfterValidate = {
      "exactness", "kernel_diagonal", "injectivity", "character_count",
      "pi_kernel", "gelfand_abelianization", "gelfand", "duality"};

  const ValidationReport v = validate(g);
  run("validate", [&]() -> std::optional<json> {
    if (v.ok()) return std::nullopt;
    return encode(v, g);
  });
  if (!v.ok()) {
    for (const auto& name : kAfterValidate) skip(name, "groupoid failed validation");
    return report;
  }

  const HostPtr host = share(g);
  if (g.size() <= options.max_exact_arrows) {
    const auto normals = enumerate_normal_subgroupoids(g, options.max_normal_subgroupoids);
    const std::string note = std::to_string(normals.size()) + " normal subgroupoids";
    std::vector<NormalSubgroupoid> hs;
    for (const auto& carrier : normals) hs.emplace_back(g, carrier);
    run("exactness", [&]() -> std::optional<json> {
      for (const auto& h : hs)
        if (auto w = exactness_violation(g, h)) return w;
      return std::nullopt;
    }, note);
    run("kernel_diagonal", [&]() -> std::optional<json> {
      for (const auto& h : hs)
        if (auto w = kernel_diagonal_violation(host, h)) return w;
      return std::nullopt;
    }, note);
    run("injectivity", [&]() -> std::optional<json> {
      for (const auto& h : hs)
        if (auto w = injectivity_violation(host, h)) return w;
      return std::nullopt;
    }, note);
  } else {
    const std::string why = "more than " + std::to_string(options.max_exact_arrows) + " arrows";
    skip("exactness", why);
    skip("kernel_diagonal", why);
    skip("injectivity", why);
  }

  run("character_count", [&] { return character_count_violation(host); });
  run("pi_kernel", [&] { return pi_kernel_violation(host); });

  const Abelianization ab = abelianize_groupoid(g);
  run("gelfand_abelianization", [&] { return gelfand_violation(ab.groupoid()); });
  if (is_abelian_group_bundle(g))
    run("gelfand", [&] { return gelfand_violation(g); });
  else
    skip("gelfand", "not an abelian group bundle");
  run("duality", [&]() -> std::optional<json> {
    for (Arrow x : ab.groupoid().units())
      if (auto w = duality_violation(FiniteAbelianGroup(fiber_group(ab.groupoid(), x)))) return w;
    return std::nullopt;
  });
  return report;
}

bool CorpusReport::ok() const {
  for (const auto& r : instances)
    if (!r.ok()) return false;
  return true;
}

json CorpusReport::to_json() const {
  json items = json::array();
  std::size_t failed = 0;
  for (const auto& r : instances) {
    failed += !r.ok();
    items.push_back(r.to_json());
  }
  return {{"first_seed", first_seed},
          {"count", instances.size()},
          {"failed", failed},
          {"status", ok() ? "pass" : "fail"},
          {"millis", millis},
          {"instances", std::move(items)}};
}

CorpusReport run_corpus(std::uint64_t first_seed, std::size_t count, int budget, int jobs,
                        const CheckOptions& options) {
  const auto start = Clock::now();
  CorpusReport out;
  out.first_seed = first_seed;
  out.instances.resize(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      const std::uint64_t seed = first_seed + i;
      out.instances[i] = run_checks(random_groupoid(seed, budget), "seed " + std::to_string(seed), options);
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  out.millis = millis_since(start);
  return out;
}

}  // namespace gk
