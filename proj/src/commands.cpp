#include "groupoidkit/commands.hpp"

#include <ostream>

#include "groupoidkit/generators.hpp"

namespace gk::cli {

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int fail(std::ostream& out, int code, const std::string& message, json witness = nullptr) {
  json j{{"error", message}};
  if (!witness.is_null()) j["witness"] = std::move(witness);
  emit(out, j);
  return code;
}

json arrow_witness(const FiniteGroupoid& g, const std::vector<Arrow>& arrows) {
  json w = json::array();
  for (Arrow a : arrows)
    w.push_back(a >= 0 && static_cast<std::size_t>(a) < g.size() ? json(g.label(a)) : json(a));
  return w;
}

/// Loads and validates; on failure writes the error and sets `code`.
std::optional<FiniteGroupoid> load_valid(const std::string& path, std::ostream& out, int& code) {
  FiniteGroupoid g;
  try {
    g = read_document(path);
  } catch (const DocumentError& e) {
    code = fail(out, kInputFailure, e.what());
    return std::nullopt;
  }
  if (const ValidationReport r = validate(g); !r.ok()) {
    code = fail(out, kSemanticFailure, "groupoid axioms violated", encode(r, g));
    return std::nullopt;
  }
  return g;
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out) {
  FiniteGroupoid g;
  try {
    g = read_document(path);
  } catch (const DocumentError& e) {
    return fail(out, kInputFailure, e.what());
  }
  const ValidationReport r = validate(g);
  emit(out, {{"status", r.ok() ? "valid" : "invalid"},
             {"elements", g.size()},
             {"units", g.units().size()},
             {"violations", encode(r, g)}});
  return r.ok() ? kOk : kSemanticFailure;
}

int cmd_quotient(const std::string& path, const std::vector<std::string>& subgroupoid, std::ostream& out) {
  int code = kOk;
  auto g = load_valid(path, out, code);
  if (!g) return code;
  ArrowSet h;
  try {
    h = arrows_from_labels(*g, subgroupoid);
  } catch (const DocumentError& e) {
    return fail(out, kInputFailure, e.what());
  }
  if (auto check = is_normal(*g, h); !check) {
    const auto& w = *check.witness;
    json witness{{"reason", w.message}};
    if (w.conjugator != kNoArrow) witness["conjugator"] = g->label(w.conjugator);
    if (w.member != kNoArrow) witness["member"] = g->label(w.member);
    return fail(out, kSemanticFailure, "not a normal subgroupoid", std::move(witness));
  }
  const NormalSubgroupoid normal(*g, h);
  const QuotientResult q = quotient(*g, normal);
  json body = encode(q, *g);
  body["exact"] = quotient_unit_preimage(q) == normal.carrier();
  emit(out, body);
  return body["exact"].get<bool>() ? kOk : kSemanticFailure;
}

int cmd_abelianize(const std::string& path, std::ostream& out) {
  int code = kOk;
  auto g = load_valid(path, out, code);
  if (!g) return code;
  const Abelianization ab = abelianize_groupoid(*g);
  const DualBundle dual = dual_bundle(ab.groupoid());
  const std::size_t dim = abelianization_dim(share(*g));
  emit(out, {{"g_fix", encode(ab.fixed.groupoid)},
             {"g_ab", encode(ab.result, ab.fixed.groupoid)},
             {"dual_bundle", encode(dual, ab.groupoid())},
             {"abelianization_dim", dim}});
  return dim == dual.total_size() ? kOk : kSemanticFailure;
}

int cmd_dual(const std::string& path, std::ostream& out) {
  int code = kOk;
  auto g = load_valid(path, out, code);
  if (!g) return code;
  try {
    emit(out, encode(dual_bundle(*g), *g));
  } catch (const GroupoidError& e) {
    return fail(out, kSemanticFailure, e.what(), arrow_witness(*g, e.witness()));
  }
  return kOk;
}

int cmd_characters(const std::string& path, std::ostream& out) {
  int code = kOk;
  auto g = load_valid(path, out, code);
  if (!g) return code;
  const HostPtr host = share(*g);
  const auto functionals = enumerate_characters(host);
  json list = json::array();
  for (const auto& phi : functionals) list.push_back(encode(phi));
  const std::size_t dim = abelianization_dim(host);
  emit(out, {{"characters", std::move(list)}, {"count", functionals.size()}, {"abelianization_dim", dim}});
  return functionals.size() == dim ? kOk : kSemanticFailure;
}

int cmd_check(const std::string& path, const CheckOptions& options, std::ostream& out) {
  FiniteGroupoid g;
  try {
    g = read_document(path);
  } catch (const DocumentError& e) {
    return fail(out, kInputFailure, e.what());
  }
  const CheckReport report = run_checks(g, path, options);
  emit(out, report.to_json());
  return report.ok() ? kOk : kSemanticFailure;
}

int cmd_check_corpus(std::uint64_t seed, std::size_t count, int budget, int jobs,
                     const CheckOptions& options, std::ostream& out) {
  if (budget < 1) return fail(out, kInputFailure, "--budget must be at least 1");
  const CorpusReport report = run_corpus(seed, count, budget, jobs, options);
  emit(out, report.to_json());
  return report.ok() ? kOk : kSemanticFailure;
}

std::vector<std::string> generator_kinds() {
  return {"trivial", "pair", "group", "bundle", "klein-cross", "s3-a3", "random", "abelian-bundle"};
}

int cmd_generate(const GenerateRequest& r, std::ostream& out) {
  try {
    std::vector<FiniteGroupoid> made;
    if (r.kind == "trivial") {
      made.push_back(trivial_groupoid(r.n));
    } else if (r.kind == "pair") {
      made.push_back(pair_groupoid(r.n));
    } else if (r.kind == "group") {
      if (r.groups.size() != 1) return fail(out, kInputFailure, "group: pass exactly one --group");
      made.push_back(one_object(library_group(r.groups.front())));
    } else if (r.kind == "bundle") {
      std::vector<std::pair<std::string, FiniteGroup>> fibers;
      for (const auto& spec : r.groups) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) return fail(out, kInputFailure, "bundle: fibers are point=GROUP");
        fibers.emplace_back(spec.substr(0, eq), library_group(spec.substr(eq + 1)));
      }
      made.push_back(group_bundle(fibers));
    } else if (r.kind == "klein-cross") {
      made.push_back(klein_cross());
    } else if (r.kind == "s3-a3") {
      made.push_back(s3_a3_bundle());
    } else if (r.kind == "random" || r.kind == "abelian-bundle") {
      for (std::size_t i = 0; i < r.count; ++i)
        made.push_back(r.kind == "random" ? random_groupoid(r.seed + i, r.budget)
                                          : random_abelian_bundle(r.seed + i));
    } else {
      return fail(out, kInputFailure, "unknown generator '" + r.kind + "'");
    }
    if (made.size() == 1) {
      emit(out, encode(made.front()));
    } else {
      json docs = json::array();
      for (const auto& g : made) docs.push_back(encode(g));
      emit(out, docs);
    }
  } catch (const std::invalid_argument& e) {
    return fail(out, kInputFailure, e.what());
  }
  return kOk;
}

}  // namespace gk::cli
