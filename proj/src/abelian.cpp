#include "groupoidkit/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace gk {

namespace {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

class SmithReducer {
 public:
  explicit SmithReducer(IntMatrix a)
      : rows_(a.size()), cols_(a.empty() ? 0 : a.front().size()) {
    f_.d = std::move(a);
    f_.u = identity_matrix(rows_);
    f_.v = identity_matrix(cols_);
    f_.v_inv = identity_matrix(cols_);
  }

  SmithForm run() {
    const std::size_t steps = std::min(rows_, cols_);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
    }
    return std::move(f_);
  }

 private:
  auto& d() { return f_.d; }

  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t c = 0; c < cols_; ++c) d()[i][c] += q * d()[j][c];
    for (std::size_t c = 0; c < rows_; ++c) f_.u[i][c] += q * f_.u[j][c];
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, std::int64_t q) {
    for (std::size_t r = 0; r < rows_; ++r) d()[r][i] += q * d()[r][j];
    for (std::size_t r = 0; r < cols_; ++r) f_.v[r][i] += q * f_.v[r][j];
    for (std::size_t c = 0; c < cols_; ++c) f_.v_inv[j][c] -= q * f_.v_inv[i][c];
  }
  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(d()[i], d()[j]);
    std::swap(f_.u[i], f_.u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : d()) std::swap(row[i], row[j]);
    for (auto& row : f_.v) std::swap(row[i], row[j]);
    std::swap(f_.v_inv[i], f_.v_inv[j]);
  }
  void negate_row(std::size_t i) {
    for (auto& x : d()[i]) x = -x;
    for (auto& x : f_.u[i]) x = -x;
  }

  // Returns false when the remaining block is zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      std::size_t pr = rows_, pc = cols_;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows_; ++i)
        for (std::size_t j = t; j < cols_; ++j) {
          const std::int64_t x = std::llabs(d()[i][j]);
          if (x != 0 && (best == 0 || x < best)) best = x, pr = i, pc = j;
        }
      if (best == 0) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      const std::int64_t p = d()[t][t];
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (d()[i][t] == 0) continue;
        add_row(i, t, -floor_div(d()[i][t], p));
        clean = clean && d()[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (d()[t][j] == 0) continue;
        add_col(j, t, -floor_div(d()[t][j], p));
        clean = clean && d()[t][j] == 0;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows_ && divides; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (d()[i][j] % p != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;
      if (p < 0) negate_row(t);
      return true;
    }
  }

  std::size_t rows_, cols_;
  SmithForm f_;
};

int power(const FiniteGroup& g, int a, std::int64_t k) {
  const std::int64_t n = g.element_order(a);
  k = mod(k, n);
  int out = g.identity();
  for (std::int64_t i = 0; i < k; ++i) out = g.mul(out, a);
  return out;
}

}  // namespace

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> out;
  const std::size_t n = std::min(d.size(), d.empty() ? std::size_t{0} : d.front().size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
  return out;
}

SmithForm smith_normal_form(IntMatrix a) { return SmithReducer(std::move(a)).run(); }

InvariantFactors invariant_factors(const FiniteGroup& g) {
  if (!g.is_abelian()) throw GroupoidError("invariant_factors: group is not abelian");
  const std::size_t n = g.order();

  std::vector<int> gens;
  std::vector<int> span{g.identity()};
  for (std::size_t a = 0; a < n; ++a) {
    if (std::binary_search(span.begin(), span.end(), static_cast<int>(a))) continue;
    gens.push_back(static_cast<int>(a));
    span = generated_subgroup(g, gens);
  }
  const std::size_t k = gens.size();

  // Spanning-tree coordinates over the generators.
  std::vector<std::vector<std::int64_t>> coord(n);
  coord[g.identity()] = std::vector<std::int64_t>(k, 0);
  std::vector<int> queue{g.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int a = queue[qi];
    for (std::size_t i = 0; i < k; ++i) {
      const int b = g.mul(a, gens[i]);
      if (!coord[b].empty()) continue;
      coord[b] = coord[a];
      ++coord[b][i];
      queue.push_back(b);
    }
  }

  IntMatrix relations;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::int64_t> row = coord[a];
      ++row[i];
      const auto& target = coord[g.mul(static_cast<int>(a), gens[i])];
      bool zero = true;
      for (std::size_t j = 0; j < k; ++j) zero = (row[j] -= target[j]) == 0 && zero;
      if (!zero) relations.push_back(std::move(row));
    }

  InvariantFactors out;
  if (k == 0) {
    out.coordinates.assign(n, {});
    return out;
  }
  const SmithForm snf = smith_normal_form(relations);
  const auto diag = snf.diagonal();

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < k; ++j)
    if (diag[j] != 1) kept.push_back(j);
  for (std::size_t j : kept) {
    out.factors.push_back(diag[j]);
    int h = g.identity();
    for (std::size_t i = 0; i < k; ++i) h = g.mul(h, power(g, gens[i], snf.v_inv[j][i]));
    out.generators.push_back(h);
  }
  out.coordinates.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j : kept) {
      std::int64_t y = 0;
      for (std::size_t i = 0; i < k; ++i) y += coord[a][i] * snf.v[i][j];
      out.coordinates[a].push_back(mod(y, diag[j]));
    }
  }
  return out;
}

FiniteAbelianGroup::FiniteAbelianGroup(FiniteGroup g) : group_(std::move(g)) {
  if (auto err = group_.check_axioms(); !err.empty())
    throw GroupoidError("not a group: " + err);
  if (!group_.is_abelian()) throw GroupoidError("group is not abelian");
  for (std::size_t a = 0; a < group_.order(); ++a)
    exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(group_.element_order(static_cast<int>(a))));
  structure_ = invariant_factors(group_);
}

std::vector<Character> characters(const FiniteAbelianGroup& a) {
  const auto& s = a.structure();
  const std::int64_t big_n = a.exponent();
  const std::size_t k = s.factors.size();
  std::vector<Character> out;
  std::vector<std::int64_t> residues(k, 0);
  for (;;) {
    Character chi;
    chi.modulus = big_n;
    chi.residues = residues;
    chi.exps.resize(a.order());
    for (std::size_t x = 0; x < a.order(); ++x) {
      std::int64_t e = 0;
      for (std::size_t j = 0; j < k; ++j)
        e += residues[j] * s.coordinates[x][j] * (big_n / s.factors[j]);
      chi.exps[x] = mod(e, big_n);
    }
    out.push_back(std::move(chi));

    std::size_t j = 0;
    for (; j < k; ++j) {
      if (++residues[j] < s.factors[j]) break;
      residues[j] = 0;
    }
    if (j == k) break;
  }
  return out;
}

bool is_character(const FiniteAbelianGroup& a, const Character& chi) {
  if (chi.exps.size() != a.order() || chi.modulus <= 0) return false;
  if (chi.exps[a.identity()] != 0) return false;
  const auto n = static_cast<int>(a.order());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mod(chi.exps[x] + chi.exps[y], chi.modulus) != chi.exps[a.op(x, y)]) return false;
  return true;
}

FiniteAbelianGroup char_group_structure(const std::vector<Character>& fiber) {
  if (fiber.empty()) throw GroupoidError("char_group_structure: empty fiber");
  const std::int64_t big_n = fiber.front().modulus;
  std::map<std::vector<std::int64_t>, int> index;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    if (fiber[i].modulus != big_n || fiber[i].exps.size() != fiber.front().exps.size())
      throw GroupoidError("char_group_structure: characters of different groups");
    if (!index.emplace(fiber[i].exps, static_cast<int>(i)).second)
      throw GroupoidError("char_group_structure: repeated character");
  }
  const std::size_t m = fiber.size();
  std::vector<int> table(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    std::string label = "chi[";
    for (std::size_t j = 0; j < fiber[i].residues.size(); ++j)
      label += (j ? "," : "") + std::to_string(fiber[i].residues[j]);
    labels.push_back(label + "]");
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::int64_t> sum(fiber[i].exps.size());
      for (std::size_t x = 0; x < sum.size(); ++x)
        sum[x] = mod(fiber[i].exps[x] + fiber[j].exps[x], big_n);
      auto it = index.find(sum);
      if (it == index.end())
        throw GroupoidError("char_group_structure: fiber is not closed under multiplication");
      table[i * m + j] = it->second;
    }
  }
  return FiniteAbelianGroup(FiniteGroup(std::move(labels), std::move(table)));
}

std::size_t DualBundle::total_size() const {
  std::size_t n = 0;
  for (const auto& f : fibers) n += f.characters.size();
  return n;
}

DualBundle dual_bundle(const FiniteGroupoid& g) {
  if (!is_group_bundle(g)) throw GroupoidError("dual_bundle: not a group bundle");
  DualBundle out;
  for (Arrow x : g.units()) {
    FiniteGroup fiber = fiber_group(g, x);
    if (!fiber.is_abelian())
      throw GroupoidError("dual_bundle: fiber at '" + g.label(x) + "' is not abelian", {x});
    FiniteAbelianGroup group(std::move(fiber));
    auto chars = characters(group);
    out.fibers.push_back({x, g.isotropy_at(x), std::move(group), std::move(chars)});
  }
  return out;
}

}  // namespace gk
