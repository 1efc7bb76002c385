#include "groupoidkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gk {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<int> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (table_.size() != n * n)
    throw std::invalid_argument("group table must have order^2 entries");
  for (int v : table_)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("group table entry out of range");

  for (std::size_t e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = mul(static_cast<int>(e), static_cast<int>(a)) == static_cast<int>(a) &&
           mul(static_cast<int>(a), static_cast<int>(e)) == static_cast<int>(a);
    if (ok) identity_ = static_cast<int>(e);
  }
  inverse_.assign(n, -1);
  if (identity_ < 0) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(static_cast<int>(a), static_cast<int>(b)) == identity_ &&
          mul(static_cast<int>(b), static_cast<int>(a)) == identity_) {
        inverse_[a] = static_cast<int>(b);
        break;
      }
}

bool FiniteGroup::is_abelian() const {
  const int n = static_cast<int>(order());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int p = a; p != identity_; p = mul(p, a)) ++k;
  return k;
}

int FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::string FiniteGroup::check_axioms() const {
  const int n = static_cast<int>(order());
  if (n == 0) return "group has no elements";
  if (identity_ < 0) return "no two-sided identity";
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) return "element '" + labels_[a] + "' has no inverse";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          return "associativity fails at (" + labels_[a] + ", " + labels_[b] + ", " +
                 labels_[c] + ")";
  return {};
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  // Finite group: closure under multiplication by generators suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      const int p = g.mul(members[i], s);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
  std::set<int> comms;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return generated_subgroup(g, {comms.begin(), comms.end()});
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> subs;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) subs.insert(generated_subgroup(g, {a}));
  // Close under joins; every subgroup of a finite group is a join of cyclic ones.
  std::vector<std::vector<int>> frontier(subs.begin(), subs.end());
  const std::vector<std::vector<int>> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(s.begin(), s.end(), c.begin(), c.end())) continue;
        std::vector<int> gens = s;
        gens.insert(gens.end(), c.begin(), c.end());
        auto joined = generated_subgroup(g, gens);
        if (subs.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  return {subs.begin(), subs.end()};
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& sub) {
  std::vector<char> in(g.order(), 0);
  for (int h : sub) in[h] = 1;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a)
    for (int h : sub)
      if (!in[g.mul(g.mul(a, h), g.inv(a))]) return false;
  return true;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  for (auto& s : all_subgroups(g))
    if (is_normal_subgroup(g, s)) out.push_back(std::move(s));
  return out;
}

FiniteGroup induced_group(const FiniteGroup& g, const std::vector<int>& sub) {
  const std::size_t m = sub.size();
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i) pos[sub[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int s : sub) labels.push_back(g.label(s));
  std::vector<int> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int p = pos[g.mul(sub[i], sub[j])];
      if (p < 0) throw std::invalid_argument("induced_group: subset is not closed");
      table[i * m + j] = p;
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels.push_back("(" + a.label(static_cast<int>(i)) + "," + b.label(static_cast<int>(j)) + ")");
  std::vector<int> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int i = a.mul(static_cast<int>(x / nb), static_cast<int>(y / nb));
      const int j = b.mul(static_cast<int>(x % nb), static_cast<int>(y % nb));
      table[x * n + y] = i * static_cast<int>(nb) + j;
    }
  return FiniteGroup(std::move(labels), std::move(table));
}

}  // namespace gk
