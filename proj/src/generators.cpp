#include "groupoidkit/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gk {

namespace {

FiniteGroup from_mul(std::vector<std::string> labels, auto mul) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
  return FiniteGroup(std::move(labels), std::move(table));
}

int positive_mod(int a, int m) { return ((a % m) + m) % m; }

// Uniform enough for corpus generation, and identical on every platform
// (std::uniform_int_distribution is implementation-defined).
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_mul(std::move(labels), [n](int a, int b) { return (a + b) % n; });
}

FiniteGroup klein_group() {
  // Bit 0 is s, bit 1 is t.
  return from_mul({"e", "s", "t", "st"}, [](int a, int b) { return a ^ b; });
}

FiniteGroup dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_group: m must be positive");
  // Element f^a r^b has index a * m + b; r^b f = f r^-b.
  std::vector<std::string> labels;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < m; ++b) {
      std::string rot = b == 0 ? "" : (b == 1 ? "r" : "r" + std::to_string(b));
      labels.push_back(a == 0 ? (b == 0 ? "e" : rot) : "f" + rot);
    }
  return from_mul(std::move(labels), [m](int x, int y) {
    const int a = x / m, b = x % m, c = y / m, d = y % m;
    const int rot = positive_mod((c == 0 ? b : -b) + d, m);
    return ((a + c) % 2) * m + rot;
  });
}

FiniteGroup symmetric_group3() {
  // Same presentation as the dihedral group with r -> s, f -> t.
  FiniteGroup d3 = dihedral_group(3);
  return FiniteGroup({"e", "s", "s2", "t", "ts", "ts2"}, d3.table());
}

FiniteGroup alternating_group3() { return FiniteGroup({"e", "s", "s2"}, cyclic_group(3).table()); }

FiniteGroup quaternion_group() {
  // Index = 4 * sign + unit, unit in {1, i, j, k}.
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return from_mul({"1", "i", "j", "k", "-1", "-i", "-j", "-k"}, [](int x, int y) {
    const int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
    return 4 * ((sx + sy + kSign[ux][uy]) % 2) + kUnit[ux][uy];
  });
}

FiniteGroup alternating_group4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += static_cast<char>('0' + v);
    labels.push_back(s == "0123" ? "e" : s);
  }
  return from_mul(std::move(labels), [&perms](int a, int b) {
    std::array<int, 4> c{};
    for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
    return static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
  });
}

std::vector<std::string> library_group_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("C" + std::to_string(n));
  for (const char* s : {"klein", "S3", "A3", "D4", "D6", "Q8", "A4"}) names.emplace_back(s);
  return names;
}

FiniteGroup library_group(const std::string& name) {
  if (name == "klein") return klein_group();
  if (name == "S3") return symmetric_group3();
  if (name == "A3") return alternating_group3();
  if (name == "D4") return dihedral_group(4);
  if (name == "D6") return dihedral_group(6);
  if (name == "Q8") return quaternion_group();
  if (name == "A4") return alternating_group4();
  if (name.size() > 1 && name[0] == 'C') {
    const int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 12) return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group '" + name + "'");
}

FiniteGroup shuffled(const FiniteGroup& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  std::vector<std::string> labels(n);
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[perm[a]] = g.label(static_cast<int>(a));
    for (std::size_t b = 0; b < n; ++b)
      table[perm[a] * n + perm[b]] = perm[g.mul(static_cast<int>(a), static_cast<int>(b))];
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

std::vector<FiniteGroup> abelian_groups_up_to(int max_order) {
  auto partitions = [](int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int k = std::min(left, cap); k >= 1; --k) {
        cur.push_back(k);
        self(self, left - k, k);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    return out;
  };

  std::vector<FiniteGroup> out;
  for (int n = 1; n <= max_order; ++n) {
    // Each choice is a list of cyclic orders.
    std::vector<std::vector<int>> choices{{}};
    int m = n;
    for (int p = 2; m > 1; ++p) {
      int e = 0;
      while (m % p == 0) m /= p, ++e;
      if (e == 0) continue;
      std::vector<std::vector<int>> next;
      for (const auto& part : partitions(e))
        for (const auto& c : choices) {
          auto extended = c;
          for (int k : part) {
            int q = 1;
            for (int i = 0; i < k; ++i) q *= p;
            extended.push_back(q);
          }
          next.push_back(std::move(extended));
        }
      choices = std::move(next);
    }
    for (const auto& orders : choices) {
      FiniteGroup g = cyclic_group(1);
      bool first = true;
      for (int q : orders) {
        g = first ? cyclic_group(q) : direct_product(g, cyclic_group(q));
        first = false;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::string GroupAction::check() const {
  if (auto err = group.check_axioms(); !err.empty()) return err;
  const std::size_t n = points.size();
  if (act.size() != group.order() * n) return "action table has the wrong size";
  for (int v : act)
    if (v < 0 || static_cast<std::size_t>(v) >= n) return "action table entry out of range";
  const int order = static_cast<int>(group.order());
  for (std::size_t x = 0; x < n; ++x) {
    const int xi = static_cast<int>(x);
    if (apply(group.identity(), xi) != xi) return "identity moves '" + points[x] + "'";
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h)
        if (apply(g, apply(h, xi)) != apply(group.mul(g, h), xi))
          return "compatibility fails at (" + group.label(g) + ", " + group.label(h) + ", " +
                 points[x] + ")";
  }
  return {};
}

GroupAction coset_action(const FiniteGroup& g, const std::vector<int>& acting,
                         const std::vector<int>& sub) {
  const int n = static_cast<int>(g.order());
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : sub) coset_of[g.mul(a, h)] = idx;
  }
  GroupAction out{induced_group(g, acting), {}, {}};
  for (int r : reps) out.points.push_back("[" + g.label(r) + "]");
  for (int s : acting)
    for (int r : reps) out.act.push_back(coset_of[g.mul(s, r)]);
  return out;
}

FiniteGroupoid transformation_groupoid(const GroupAction& a) {
  if (auto err = a.check(); !err.empty())
    throw std::invalid_argument("transformation_groupoid: " + err);
  const FiniteGroup& grp = a.group;
  const int nx = static_cast<int>(a.points.size());
  const int ng = static_cast<int>(grp.order());
  auto id = [nx](int g, int x) { return g * nx + x; };

  std::vector<std::string> labels;
  std::vector<Arrow> units, src, rng, inv;
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nx; ++x) {
      labels.push_back("(" + grp.label(g) + "," + a.points[x] + ")");
      src.push_back(id(grp.identity(), x));
      rng.push_back(id(grp.identity(), a.apply(g, x)));
      inv.push_back(id(grp.inv(g), a.apply(g, x)));
    }
  for (int x = 0; x < nx; ++x) units.push_back(id(grp.identity(), x));
  // (g1, h.x) * (h, x) = (g1 h, x)
  return make_groupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                       std::move(inv),
                       [&](Arrow p, Arrow q) { return id(grp.mul(p / nx, q / nx), q % nx); });
}

FiniteGroupoid group_bundle(const std::vector<std::pair<std::string, FiniteGroup>>& fibers) {
  std::vector<std::string> labels;
  std::vector<Arrow> units, src, rng, inv;
  std::vector<Arrow> fiber_of, offset_of;
  std::vector<std::vector<int>> elem_of;  // per fiber: slot -> group element
  std::vector<std::vector<Arrow>> slot_of;  // per fiber: group element -> slot
  for (const auto& [point, grp] : fibers) {
    if (auto err = grp.check_axioms(); !err.empty())
      throw std::invalid_argument("group_bundle: fiber '" + point + "': " + err);
    const auto offset = static_cast<Arrow>(labels.size());
    // Identity first, so the unit is the smallest arrow of its fiber.
    std::vector<int> order{grp.identity()};
    for (int g = 0; g < static_cast<int>(grp.order()); ++g)
      if (g != grp.identity()) order.push_back(g);
    std::vector<Arrow> slot(grp.order());
    for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = static_cast<Arrow>(i);
    for (int g : order) {
      labels.push_back("(" + grp.label(g) + "," + point + ")");
      src.push_back(offset);
      rng.push_back(offset);
      inv.push_back(offset + slot[grp.inv(g)]);
      fiber_of.push_back(static_cast<Arrow>(offset_of.size()));
    }
    units.push_back(offset);
    offset_of.push_back(offset);
    elem_of.push_back(std::move(order));
    slot_of.push_back(std::move(slot));
  }
  return make_groupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                       std::move(inv), [&](Arrow a, Arrow b) {
                         const Arrow f = fiber_of[a];
                         const Arrow off = offset_of[f];
                         const int prod = fibers[f].second.mul(elem_of[f][a - off], elem_of[f][b - off]);
                         return off + slot_of[f][prod];
                       });
}

FiniteGroupoid trivial_groupoid(int n) {
  std::vector<std::string> labels;
  std::vector<Arrow> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return make_groupoid(std::move(labels), ids, ids, ids, ids, [](Arrow a, Arrow) { return a; });
}

FiniteGroupoid pair_groupoid(int n) {
  // Arrow (i, j) goes from j to i.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::map<std::pair<int, int>, Arrow> index;
  for (std::size_t k = 0; k < pairs.size(); ++k) index[pairs[k]] = static_cast<Arrow>(k);

  std::vector<std::string> labels;
  std::vector<Arrow> units, src, rng, inv;
  for (const auto& [i, j] : pairs) {
    labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    src.push_back(index[{j, j}]);
    rng.push_back(index[{i, i}]);
    inv.push_back(index[{j, i}]);
  }
  for (int i = 0; i < n; ++i) units.push_back(i);
  return make_groupoid(std::move(labels), std::move(units), std::move(src), std::move(rng),
                       std::move(inv), [&](Arrow a, Arrow b) {
                         return index[{pairs[a].first, pairs[b].second}];
                       });
}

FiniteGroupoid one_object(const FiniteGroup& g, const std::string& point) {
  return group_bundle({{point, g}});
}

GroupAction klein_cross_action() {
  // Points c, x+, x-, y+, y-; s = bit 0 flips the x-arm, t = bit 1 the y-arm.
  GroupAction a{klein_group(), {"c", "x+", "x-", "y+", "y-"}, {}};
  for (int g = 0; g < 4; ++g) {
    const bool s = g & 1, t = g & 2;
    a.act.insert(a.act.end(), {0, s ? 2 : 1, s ? 1 : 2, t ? 4 : 3, t ? 3 : 4});
  }
  return a;
}

FiniteGroupoid klein_cross() { return transformation_groupoid(klein_cross_action()); }

FiniteGroupoid s3_a3_bundle() {
  return group_bundle({{"p", symmetric_group3()}, {"q", alternating_group3()}});
}

FiniteGroupoid relabel(const FiniteGroupoid& g, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(prefix + l);
  return FiniteGroupoid(std::move(labels), g.units(), g.src_table(), g.rng_table(), g.comp_table(),
                        g.inv_table());
}

FiniteGroupoid random_groupoid(std::uint64_t seed, int size_budget) {
  if (size_budget < 1) throw std::invalid_argument("random_groupoid: size_budget must be >= 1");
  std::mt19937_64 rng(seed);
  const auto names = library_group_names();
  FiniteGroupoid out;
  int remaining = size_budget;
  for (int part = 0; remaining > 0; ++part) {
    if (part > 0 && draw(rng, 10) < 4) break;
    GroupAction action{cyclic_group(1), {"pt"}, {0}};
    for (int attempt = 0; attempt < 16; ++attempt) {
      const FiniteGroup g = library_group(names[draw(rng, names.size())]);
      if (static_cast<int>(g.order()) > remaining) continue;
      const auto subs = all_subgroups(g);
      const auto& acting = subs[draw(rng, subs.size())];
      // A quarter of the parts act on a single point, which is then fixed.
      std::vector<int> all(g.order());
      std::iota(all.begin(), all.end(), 0);
      const auto& stabilizer = draw(rng, 4) == 0 ? all : subs[draw(rng, subs.size())];
      GroupAction candidate = coset_action(g, acting, stabilizer);
      if (static_cast<int>(candidate.group.order() * candidate.points.size()) <= remaining) {
        action = std::move(candidate);
        break;
      }
    }
    FiniteGroupoid piece = relabel(transformation_groupoid(action), "p" + std::to_string(part) + ".");
    remaining -= static_cast<int>(piece.size());
    out = out.empty() ? std::move(piece) : disjoint_union(out, piece);
  }
  return out;
}

FiniteGroupoid random_abelian_bundle(std::uint64_t seed, int max_points) {
  static const std::vector<std::pair<int, int>> kShapes = {
      {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1}, {10, 1},
      {11, 1}, {12, 1}, {2, 2}, {2, 4}, {2, 6}, {3, 3}};
  std::mt19937_64 rng(seed);
  const int points = 1 + static_cast<int>(draw(rng, static_cast<std::size_t>(max_points)));
  std::vector<std::pair<std::string, FiniteGroup>> fibers;
  for (int p = 0; p < points; ++p) {
    const auto [a, b] = kShapes[draw(rng, kShapes.size())];
    FiniteGroup g = b == 1 ? cyclic_group(a) : direct_product(cyclic_group(a), cyclic_group(b));
    fibers.emplace_back("u" + std::to_string(p), shuffled(g, rng()));
  }
  return group_bundle(fibers);
}

}  // namespace gk
