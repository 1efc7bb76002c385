#include "groupoidkit/groupoid.hpp"

#include <algorithm>

namespace gk {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> labels, std::vector<Arrow> units,
                               std::vector<Arrow> src, std::vector<Arrow> rng,
                               std::vector<Arrow> comp, std::vector<Arrow> inv)
    : labels_(std::move(labels)),
      units_(std::move(units)),
      src_(std::move(src)),
      rng_(std::move(rng)),
      comp_(std::move(comp)),
      inv_(std::move(inv)) {
  const std::size_t n = labels_.size();
  if (src_.size() != n || rng_.size() != n || inv_.size() != n || comp_.size() != n * n)
    throw std::invalid_argument("groupoid tables have inconsistent sizes");
  std::sort(units_.begin(), units_.end());
  is_unit_.assign(n, 0);
  for (Arrow u : units_)
    if (u >= 0 && static_cast<std::size_t>(u) < n) is_unit_[u] = 1;
}

std::optional<Arrow> FiniteGroupoid::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Arrow>(it - labels_.begin());
}

ArrowSet FiniteGroupoid::arrows_from(Arrow x) const {
  ArrowSet out;
  for (std::size_t a = 0; a < size(); ++a)
    if (src_[a] == x) out.push_back(static_cast<Arrow>(a));
  return out;
}

ArrowSet FiniteGroupoid::isotropy_at(Arrow x) const {
  ArrowSet out;
  for (std::size_t a = 0; a < size(); ++a)
    if (src_[a] == x && rng_[a] == x) out.push_back(static_cast<Arrow>(a));
  return out;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMalformed: return "malformed";
    case ViolationKind::kCompOnNonComposable: return "comp-on-non-composable";
    case ViolationKind::kMissingComposite: return "missing-composite";
    case ViolationKind::kUnitLaw: return "unit-law";
    case ViolationKind::kIdentityLaw: return "identity-law";
    case ViolationKind::kSourceRange: return "source-range";
    case ViolationKind::kAssociativity: return "associativity";
    case ViolationKind::kInverseLaw: return "inverse-law";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

constexpr std::size_t kMaxViolations = 64;

class Reporter {
 public:
  explicit Reporter(const FiniteGroupoid& g) : g_(g) {}

  void add(ViolationKind kind, std::string message, std::vector<Arrow> witness) {
    if (report_.violations.size() < kMaxViolations)
      report_.violations.push_back({kind, std::move(message), std::move(witness)});
  }
  std::string name(Arrow a) const { return g_.label(a); }
  ValidationReport take() { return std::move(report_); }
  bool empty() const { return report_.violations.empty(); }

 private:
  const FiniteGroupoid& g_;
  ValidationReport report_;
};

bool check_ranges(const FiniteGroupoid& g, Reporter& rep) {
  const auto n = static_cast<Arrow>(g.size());
  auto in_range = [n](Arrow a) { return a >= 0 && a < n; };
  bool ok = true;
  const auto& units = g.units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!in_range(units[i])) {
      rep.add(ViolationKind::kMalformed, "unit index out of range", {});
      ok = false;
    } else if (i > 0 && units[i] == units[i - 1]) {
      rep.add(ViolationKind::kMalformed, "duplicate unit '" + rep.name(units[i]) + "'", {units[i]});
      ok = false;
    }
  }
  for (Arrow a = 0; a < n; ++a) {
    const Arrow s = g.src(a), r = g.rng(a), i = g.inv(a);
    if (!in_range(s) || !in_range(r) || !in_range(i)) {
      rep.add(ViolationKind::kMalformed, "src/rng/inv of '" + rep.name(a) + "' out of range", {a});
      ok = false;
      continue;
    }
    if (!g.is_unit(s) || !g.is_unit(r)) {
      rep.add(ViolationKind::kMalformed, "src/rng of '" + rep.name(a) + "' is not a unit", {a});
      ok = false;
    }
  }
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b) {
      const Arrow c = g.comp(a, b);
      if (c != kNoArrow && !in_range(c)) {
        rep.add(ViolationKind::kMalformed, "composite index out of range", {a, b});
        ok = false;
      }
    }
  return ok;
}

}  // namespace

ValidationReport validate(const FiniteGroupoid& g) {
  Reporter rep(g);
  if (!check_ranges(g, rep)) return rep.take();

  const auto n = static_cast<Arrow>(g.size());
  for (Arrow x : g.units())
    if (g.src(x) != x || g.rng(x) != x)
      rep.add(ViolationKind::kUnitLaw, "unit '" + rep.name(x) + "' is not its own source and range", {x});

  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b) {
      const Arrow c = g.comp(a, b);
      const bool composable = g.composable(a, b);
      if (composable && c == kNoArrow)
        rep.add(ViolationKind::kMissingComposite,
                "composable pair (" + rep.name(a) + ", " + rep.name(b) + ") has no product", {a, b});
      else if (!composable && c != kNoArrow)
        rep.add(ViolationKind::kCompOnNonComposable,
                "product defined on non-composable pair (" + rep.name(a) + ", " + rep.name(b) + ")",
                {a, b});
      else if (composable && (g.src(c) != g.src(b) || g.rng(c) != g.rng(a)))
        rep.add(ViolationKind::kSourceRange,
                "src/rng of " + rep.name(a) + "*" + rep.name(b) + " is wrong", {a, b});
    }

  for (Arrow a = 0; a < n; ++a) {
    if (g.comp(a, g.src(a)) != a || g.comp(g.rng(a), a) != a)
      rep.add(ViolationKind::kIdentityLaw, "identity law fails for '" + rep.name(a) + "'", {a});
  }

  // Associativity over composable triples a*b*c, grouped by the middle arrow.
  std::vector<ArrowSet> by_src(n), by_rng(n);
  for (Arrow a = 0; a < n; ++a) {
    by_src[g.src(a)].push_back(a);
    by_rng[g.rng(a)].push_back(a);
  }
  for (Arrow b = 0; b < n; ++b) {
    for (Arrow a : by_src[g.rng(b)]) {
      const Arrow ab = g.comp(a, b);
      for (Arrow c : by_rng[g.src(b)]) {
        const Arrow bc = g.comp(b, c);
        if (ab == kNoArrow || bc == kNoArrow) continue;
        const Arrow left = g.comp(ab, c), right = g.comp(a, bc);
        if (left != right)
          rep.add(ViolationKind::kAssociativity,
                  "(" + rep.name(a) + "*" + rep.name(b) + ")*" + rep.name(c) + " != " + rep.name(a) +
                      "*(" + rep.name(b) + "*" + rep.name(c) + ")",
                  {a, b, c});
      }
    }
  }

  for (Arrow a = 0; a < n; ++a) {
    const Arrow i = g.inv(a);
    if (g.comp(i, a) != g.src(a) || g.comp(a, i) != g.rng(a))
      rep.add(ViolationKind::kInverseLaw, "inverse law fails for '" + rep.name(a) + "'", {a});
  }
  return rep.take();
}

ArrowSet isotropy(const FiniteGroupoid& g) {
  ArrowSet out;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (g.src(static_cast<Arrow>(a)) == g.rng(static_cast<Arrow>(a))) out.push_back(static_cast<Arrow>(a));
  return out;
}

ArrowSet compose_sets(const FiniteGroupoid& g, const ArrowSet& u, const ArrowSet& v) {
  std::vector<char> hit(g.size(), 0);
  for (Arrow a : u)
    for (Arrow b : v)
      if (g.composable(a, b)) hit[g.comp(a, b)] = 1;
  ArrowSet out;
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c]) out.push_back(static_cast<Arrow>(c));
  return out;
}

bool is_bisection(const FiniteGroupoid& g, const ArrowSet& s) {
  std::vector<char> seen_src(g.size(), 0), seen_rng(g.size(), 0);
  for (Arrow a : s) {
    if (seen_src[g.src(a)]++ || seen_rng[g.rng(a)]++) return false;
  }
  return true;
}

std::optional<Arrow> invariance_witness(const FiniteGroupoid& g, const ArrowSet& f) {
  std::vector<char> in(g.size(), 0);
  for (Arrow x : f) in[x] = 1;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (in[g.src(static_cast<Arrow>(a))] && !in[g.rng(static_cast<Arrow>(a))]) return static_cast<Arrow>(a);
  return std::nullopt;
}

bool is_invariant(const FiniteGroupoid& g, const ArrowSet& f) { return !invariance_witness(g, f); }

ArrowSet fixed_points(const FiniteGroupoid& g) {
  std::vector<char> moved(g.size(), 0);
  for (std::size_t a = 0; a < g.size(); ++a) {
    const Arrow s = g.src(static_cast<Arrow>(a));
    if (g.rng(static_cast<Arrow>(a)) != s) moved[s] = 1;
  }
  ArrowSet out;
  for (Arrow x : g.units())
    if (!moved[x]) out.push_back(x);
  return out;
}

ArrowSet restriction_arrows(const FiniteGroupoid& g, const ArrowSet& f) {
  std::vector<char> in(g.size(), 0);
  for (Arrow x : f) in[x] = 1;
  ArrowSet out;
  for (std::size_t a = 0; a < g.size(); ++a)
    if (in[g.src(static_cast<Arrow>(a))]) out.push_back(static_cast<Arrow>(a));
  return out;
}

FiniteGroupoid restrict(const FiniteGroupoid& g, const ArrowSet& f) {
  for (Arrow x : f)
    if (x < 0 || static_cast<std::size_t>(x) >= g.size() || !g.is_unit(x))
      throw GroupoidError("restrict: not a unit", {x});
  if (auto w = invariance_witness(g, f))
    throw GroupoidError("restrict: unit set is not invariant under '" + g.label(*w) + "'", {*w});

  const ArrowSet arrows = restriction_arrows(g, f);
  std::vector<Arrow> pos(g.size(), kNoArrow);
  for (std::size_t i = 0; i < arrows.size(); ++i) pos[arrows[i]] = static_cast<Arrow>(i);

  std::vector<std::string> labels;
  std::vector<Arrow> units, src, rng, inv;
  for (Arrow a : arrows) {
    labels.push_back(g.label(a));
    src.push_back(pos[g.src(a)]);
    rng.push_back(pos[g.rng(a)]);
    inv.push_back(pos[g.inv(a)]);
    if (g.is_unit(a)) units.push_back(pos[a]);
  }
  return make_groupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                       std::move(inv),
                       [&](Arrow a, Arrow b) { return pos[g.comp(arrows[a], arrows[b])]; });
}

bool is_effective(const FiniteGroupoid& g) { return isotropy(g) == g.units(); }

bool is_group_bundle(const FiniteGroupoid& g) { return isotropy(g).size() == g.size(); }

FiniteGroup fiber_group(const FiniteGroupoid& g, Arrow x) {
  const ArrowSet fiber = g.isotropy_at(x);
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < fiber.size(); ++i) pos[fiber[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (Arrow a : fiber) labels.push_back(g.label(a));
  const std::size_t m = fiber.size();
  std::vector<int> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = pos[g.comp(fiber[i], fiber[j])];
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const auto shift = static_cast<Arrow>(a.size());
  auto labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  auto units = a.units();
  auto src = a.src_table(), rng = a.rng_table(), inv = a.inv_table();
  for (Arrow u : b.units()) units.push_back(u + shift);
  for (std::size_t i = 0; i < b.size(); ++i) {
    src.push_back(b.src(static_cast<Arrow>(i)) + shift);
    rng.push_back(b.rng(static_cast<Arrow>(i)) + shift);
    inv.push_back(b.inv(static_cast<Arrow>(i)) + shift);
  }
  return make_groupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                       std::move(inv), [&](Arrow x, Arrow y) {
                         if (x < shift) return a.comp(x, y);
                         return b.comp(x - shift, y - shift) + shift;
                       });
}

}  // namespace gk
