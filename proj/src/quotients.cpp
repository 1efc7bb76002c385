#include "groupoidkit/quotients.hpp"

#include <algorithm>
#include <numeric>

namespace gk {

NormalityCheck is_normal(const FiniteGroupoid& g, const ArrowSet& h) {
  using Reason = NormalityWitness::Reason;
  std::vector<char> in(g.size(), 0);
  for (Arrow a : h) {
    if (a < 0 || static_cast<std::size_t>(a) >= g.size())
      throw GroupoidError("is_normal: arrow index out of range", {a});
    in[a] = 1;
  }
  auto fail = [](Reason r, std::string msg, Arrow conj, Arrow member) {
    return NormalityCheck{NormalityWitness{r, std::move(msg), conj, member}};
  };

  for (Arrow x : g.units())
    if (!in[x]) return fail(Reason::kMissingUnit, "unit '" + g.label(x) + "' is missing", kNoArrow, x);
  for (Arrow a : h)
    if (g.src(a) != g.rng(a))
      return fail(Reason::kNotIsotropy, "'" + g.label(a) + "' is not in the isotropy", kNoArrow, a);
  for (Arrow a : h) {
    if (!in[g.inv(a)])
      return fail(Reason::kNotClosed, "inverse of '" + g.label(a) + "' is missing", kNoArrow, a);
    for (Arrow b : h)
      if (g.composable(a, b) && !in[g.comp(a, b)])
        return fail(Reason::kNotClosed,
                    "product " + g.label(a) + "*" + g.label(b) + " is missing", a, b);
  }
  const auto n = static_cast<Arrow>(g.size());
  for (Arrow alpha = 0; alpha < n; ++alpha)
    for (Arrow m : h) {
      if (g.rng(m) != g.src(alpha)) continue;
      const Arrow conj = g.comp(g.comp(alpha, m), g.inv(alpha));
      if (!in[conj])
        return fail(Reason::kNotConjugationInvariant,
                    "conjugate of '" + g.label(m) + "' by '" + g.label(alpha) + "' is '" +
                        g.label(conj) + "', not in the subset",
                    alpha, m);
    }
  return {};
}

NormalSubgroupoid::NormalSubgroupoid(const FiniteGroupoid& host, ArrowSet carrier)
    : carrier_(std::move(carrier)) {
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
  if (auto check = is_normal(host, carrier_); !check) {
    std::vector<Arrow> witness;
    if (check.witness->conjugator != kNoArrow) witness.push_back(check.witness->conjugator);
    witness.push_back(check.witness->member);
    throw GroupoidError("not a normal subgroupoid: " + check.witness->message, witness);
  }
  member_.assign(host.size(), 0);
  for (Arrow a : carrier_) member_[a] = 1;
}

QuotientResult quotient(const FiniteGroupoid& g, const NormalSubgroupoid& h) {
  const std::size_t n = g.size();
  // Class of a is H_{rng(a)} * a; its label is the smallest member.
  std::vector<Arrow> rep_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Arrow>(i);
    Arrow best = a;
    for (Arrow m : g.isotropy_at(g.rng(a)))
      if (h.contains(m)) best = std::min(best, g.comp(m, a));
    rep_of[i] = best;
  }

  QuotientResult out;
  std::vector<Arrow> index_of(n, kNoArrow);
  for (std::size_t i = 0; i < n; ++i)
    if (rep_of[i] == static_cast<Arrow>(i)) {
      index_of[i] = static_cast<Arrow>(out.representatives.size());
      out.representatives.push_back(static_cast<Arrow>(i));
    }
  out.class_map.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.class_map[i] = index_of[rep_of[i]];

  const auto& reps = out.representatives;
  const auto& q = out.class_map;
  std::vector<std::string> labels;
  std::vector<Arrow> units, src, rng, inv;
  for (Arrow r : reps) {
    labels.push_back(g.label(r));
    src.push_back(q[g.src(r)]);
    rng.push_back(q[g.rng(r)]);
    inv.push_back(q[g.inv(r)]);
  }
  for (Arrow x : g.units()) units.push_back(q[x]);
  out.quotient = make_groupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                               std::move(inv),
                               [&](Arrow a, Arrow b) { return q[g.comp(reps[a], reps[b])]; });
  return out;
}

ArrowSet quotient_unit_preimage(const QuotientResult& q) {
  ArrowSet out;
  for (std::size_t a = 0; a < q.class_map.size(); ++a)
    if (q.quotient.is_unit(q.class_map[a])) out.push_back(static_cast<Arrow>(a));
  return out;
}

NormalSubgroupoid interior_isotropy(const FiniteGroupoid& g) {
  return NormalSubgroupoid(g, isotropy(g));
}

NormalSubgroupoid commutator_subgroupoid(const FiniteGroupoid& g) {
  if (!is_group_bundle(g)) throw GroupoidError("commutator_subgroupoid: not a group bundle");
  ArrowSet carrier;
  for (Arrow x : g.units()) {
    const ArrowSet fiber = g.isotropy_at(x);
    for (int i : commutator_subgroup(fiber_group(g, x))) carrier.push_back(fiber[i]);
  }
  return NormalSubgroupoid(g, std::move(carrier));
}

FixedPart g_fix(const FiniteGroupoid& g) {
  const ArrowSet fixed = fixed_points(g);
  return {restrict(g, fixed), restriction_arrows(g, fixed)};
}

Abelianization abelianize_groupoid(const FiniteGroupoid& g) {
  FixedPart fixed = g_fix(g);
  auto comm = commutator_subgroupoid(fixed.groupoid);
  QuotientResult result = quotient(fixed.groupoid, comm);
  return {std::move(fixed), std::move(result)};
}

namespace {

std::vector<std::vector<Arrow>> components(const FiniteGroupoid& g) {
  std::vector<Arrow> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Arrow x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < g.size(); ++a) {
    const Arrow s = find(g.src(static_cast<Arrow>(a))), r = find(g.rng(static_cast<Arrow>(a)));
    if (s != r) parent[std::max(s, r)] = std::min(s, r);
  }
  std::vector<std::vector<Arrow>> comps;
  std::vector<int> slot(g.size(), -1);
  for (Arrow x : g.units()) {
    const Arrow root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[root]].push_back(x);
  }
  return comps;
}

}  // namespace

std::vector<ArrowSet> enumerate_normal_subgroupoids(const FiniteGroupoid& g, std::size_t limit) {
  // Per component: the list of candidate carriers restricted to that component.
  std::vector<std::vector<ArrowSet>> options;
  for (const auto& comp : components(g)) {
    const Arrow base = comp.front();
    const ArrowSet fiber = g.isotropy_at(base);
    std::vector<Arrow> to(g.size(), kNoArrow);  // to[v]: some arrow base -> v
    for (Arrow a : g.arrows_from(base))
      if (to[g.rng(a)] == kNoArrow) to[g.rng(a)] = a;

    std::vector<ArrowSet> local;
    for (const auto& sub : normal_subgroups(fiber_group(g, base))) {
      ArrowSet carrier;
      for (Arrow v : comp) {
        const Arrow alpha = to[v];
        for (int i : sub) carrier.push_back(g.comp(g.comp(alpha, fiber[i]), g.inv(alpha)));
      }
      std::sort(carrier.begin(), carrier.end());
      local.push_back(std::move(carrier));
    }
    options.push_back(std::move(local));
  }

  std::vector<ArrowSet> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (out.size() < limit) {
    ArrowSet carrier;
    for (std::size_t c = 0; c < options.size(); ++c)
      carrier.insert(carrier.end(), options[c][pick[c]].begin(), options[c][pick[c]].end());
    std::sort(carrier.begin(), carrier.end());
    out.push_back(std::move(carrier));
    std::size_t c = 0;
    for (; c < options.size(); ++c) {
      if (++pick[c] < options[c].size()) break;
      pick[c] = 0;
    }
    if (c == options.size()) break;
  }
  return out;
}

bool is_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b, const std::vector<Arrow>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (Arrow y : f) {
    if (y < 0 || static_cast<std::size_t>(y) >= b.size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = static_cast<Arrow>(i);
    if (a.is_unit(x) != b.is_unit(f[x])) return false;
    if (f[a.src(x)] != b.src(f[x]) || f[a.rng(x)] != b.rng(f[x]) || f[a.inv(x)] != b.inv(f[x]))
      return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const auto y = static_cast<Arrow>(j);
      if (a.composable(x, y) && f[a.comp(x, y)] != b.comp(f[x], f[y])) return false;
    }
  }
  return true;
}

bool is_abelian_group_bundle(const FiniteGroupoid& g) {
  if (!is_group_bundle(g)) return false;
  const auto n = static_cast<Arrow>(g.size());
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = a + 1; b < n; ++b)
      if (g.composable(a, b) && g.comp(a, b) != g.comp(b, a)) return false;
  return true;
}

}  // namespace gk
