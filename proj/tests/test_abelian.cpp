#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "groupoidkit/abelian.hpp"
#include "groupoidkit/generators.hpp"
#include "support.hpp"

using namespace gk;

namespace {

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size(), cols = inner ? b.front().size() : 0;
  IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::int64_t det(IntMatrix m) {
  // Cofactor expansion; only used on tiny matrices.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    sum += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return sum;
}

// gcd of all k x k minors (the k-th determinantal divisor).
std::int64_t determinantal_divisor(const IntMatrix& a, std::size_t k) {
  const std::size_t rows = a.size(), cols = a.front().size();
  std::int64_t g = 0;
  std::vector<std::size_t> r(k), c(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    for (std::size_t i = idx.size(); i-- > 0;)
      if (idx[i] < n - idx.size() + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    return false;
  };
  std::iota(r.begin(), r.end(), 0);
  do {
    std::iota(c.begin(), c.end(), 0);
    do {
      IntMatrix m(k, std::vector<std::int64_t>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
      g = std::gcd(g, det(m));
    } while (next(c, cols));
  } while (next(r, rows));
  return g;
}

// |{a : a^d = e}|, counted by repeated multiplication.
std::size_t d_torsion(const FiniteGroup& g, std::int64_t d) {
  std::size_t count = 0;
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    int p = g.identity();
    for (std::int64_t k = 0; k < d; ++k) p = g.mul(p, a);
    count += p == g.identity();
  }
  return count;
}

// A finite abelian group is determined by its torsion counts; for Z/n1 x ... x Z/nk
// the count at d is prod gcd(d, ni).
void check_factors_by_torsion(const FiniteGroup& g, const std::vector<std::int64_t>& factors) {
  std::int64_t product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    CHECK(factors[i] > 1);
    if (i > 0) CHECK(factors[i] % factors[i - 1] == 0);
    product *= factors[i];
  }
  CHECK(product == static_cast<std::int64_t>(g.order()));
  for (std::int64_t d = 1; d <= static_cast<std::int64_t>(g.order()); ++d) {
    if (static_cast<std::int64_t>(g.order()) % d) continue;
    std::size_t expected = 1;
    for (auto n : factors) expected *= static_cast<std::size_t>(std::gcd(d, n));
    CHECK(d_torsion(g, d) == expected);
  }
}

// Every map A -> Z/N checked against the homomorphism law; only for tiny groups.
std::size_t brute_character_count(const FiniteAbelianGroup& a) {
  const std::size_t n = a.order();
  const auto modulus = a.exponent();
  std::vector<std::int64_t> f(n, 0);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = f[a.op(static_cast<int>(x), static_cast<int>(y))] == (f[x] + f[y]) % modulus;
    count += ok;
    std::size_t k = 0;
    while (k < n && ++f[k] == modulus) f[k++] = 0;
    if (k == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("Smith normal form examples", "[abelian][snf]") {
  const SmithForm s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(s.diagonal() == std::vector<std::int64_t>{2, 6, 12});
  CHECK(smith_normal_form({{0, 0}, {0, 0}}).diagonal() == std::vector<std::int64_t>{0, 0});
  CHECK(smith_normal_form({{6}}).diagonal() == std::vector<std::int64_t>{6});
  CHECK(smith_normal_form({{2, 0}, {0, 3}}).diagonal() == std::vector<std::int64_t>{1, 6});
}

TEST_CASE("Smith normal form agrees with determinantal divisors", "[abelian][snf][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 25) - 12;
    const SmithForm s = smith_normal_form(a);

    CHECK(mul(mul(s.u, a), s.v) == s.d);
    CHECK(mul(s.v, s.v_inv) == identity(cols));
    CHECK(std::abs(det(s.u)) == 1);
    CHECK(std::abs(det(s.v)) == 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(s.d[i][j] == 0);

    // d1 * ... * dk equals the k-th determinantal divisor (up to sign).
    const auto diag = s.diagonal();
    std::int64_t prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      CHECK(std::abs(prod) == determinantal_divisor(a, k));
      if (k >= 2 && diag[k - 2] != 0) CHECK(diag[k - 1] % diag[k - 2] == 0);
    }
  }
}

TEST_CASE("invariant factor examples", "[abelian]") {
  CHECK(FiniteAbelianGroup(cyclic_group(1)).structure().factors.empty());
  CHECK(invariant_factors(FiniteAbelianGroup(klein_group())) == std::vector<std::int64_t>{2, 2});

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FiniteGroup z6 = shuffled(cyclic_group(6), seed);
    CHECK(invariant_factors(FiniteAbelianGroup(z6)) == std::vector<std::int64_t>{6});
    bool has_order_six = false;
    for (int a = 0; a < 6; ++a) has_order_six |= z6.element_order(a) == 6;
    CHECK(has_order_six);
  }
  CHECK_THROWS_AS(FiniteAbelianGroup(symmetric_group3()), GroupoidError);
}

TEST_CASE("invariant factors match torsion counts for every abelian group up to 64",
          "[abelian][property]") {
  std::uint64_t seed = 0;
  for (const auto& g : abelian_groups_up_to(64)) {
    const FiniteGroup h = shuffled(g, seed++);
    const FiniteAbelianGroup a(h);
    INFO("order " << h.order());
    check_factors_by_torsion(h, invariant_factors(a));

    const auto& st = a.structure();
    for (std::size_t j = 0; j < st.factors.size(); ++j)
      CHECK(h.element_order(st.generators[j]) == st.factors[j]);
    std::set<std::vector<std::int64_t>> coords(st.coordinates.begin(), st.coordinates.end());
    CHECK(coords.size() == h.order());
    std::int64_t lcm = 1;
    for (int x = 0; x < static_cast<int>(h.order()); ++x) lcm = std::lcm(lcm, static_cast<std::int64_t>(h.element_order(x)));
    CHECK(a.exponent() == lcm);
  }
}

TEST_CASE("abelian group census", "[abelian]") {
  // Number of abelian groups of each order n <= 16, from partitions of prime exponents.
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5};
  std::vector<std::size_t> counts(16, 0);
  for (const auto& g : abelian_groups_up_to(16)) ++counts[g.order() - 1];
  CHECK(counts == expected);
}

TEST_CASE("character examples", "[abelian]") {
  SECTION("trivial group") {
    const auto chars = characters(FiniteAbelianGroup(cyclic_group(1)));
    REQUIRE(chars.size() == 1);
    CHECK(chars[0].exps == std::vector<std::int64_t>{0});
  }
  SECTION("Z/2 sign character") {
    const FiniteAbelianGroup a(cyclic_group(2));
    const auto chars = characters(a);
    REQUIRE(chars.size() == 2);
    std::set<std::vector<std::int64_t>> values;
    for (const auto& c : chars) values.insert(c.exps);
    const std::int64_t n = a.exponent();
    CHECK(values == std::set<std::vector<std::int64_t>>{{0, 0}, {0, n / 2}});
  }
  SECTION("Klein group") {
    const FiniteAbelianGroup a(klein_group());
    const auto chars = characters(a);
    CHECK(chars.size() == 4);
    CHECK(brute_character_count(a) == 4);
    const FiniteAbelianGroup dual = char_group_structure(chars);
    CHECK(invariant_factors(dual) == std::vector<std::int64_t>{2, 2});
  }
}

TEST_CASE("character enumeration matches brute force on small groups", "[abelian][property]") {
  for (const auto& g : abelian_groups_up_to(9)) {
    const FiniteAbelianGroup a(g);
    if (std::pow(static_cast<double>(a.exponent()), static_cast<double>(a.order())) > 1e6) continue;
    const auto chars = characters(a);
    CHECK(chars.size() == brute_character_count(a));
    for (const auto& chi : chars) CHECK(is_character(a, chi));
  }
}

TEST_CASE("characters separate points", "[abelian][property]") {
  std::uint64_t seed = 100;
  for (const auto& g : abelian_groups_up_to(32)) {
    const FiniteAbelianGroup a(shuffled(g, seed++));
    const auto chars = characters(a);
    for (int x = 0; x < static_cast<int>(a.order()); ++x) {
      if (x == a.identity()) continue;
      bool separated = false;
      for (const auto& chi : chars) separated |= chi.exps[x] != 0;
      CHECK(separated);
    }
  }
}

TEST_CASE("is_character rejects non-homomorphisms", "[abelian]") {
  const FiniteAbelianGroup a(cyclic_group(4));
  Character bad = characters(a)[1];
  bad.exps[a.identity()] = 1;
  CHECK_FALSE(is_character(a, bad));
}

TEST_CASE("char_group_structure examples", "[abelian]") {
  CHECK(invariant_factors(char_group_structure(characters(FiniteAbelianGroup(cyclic_group(2))))) ==
        std::vector<std::int64_t>{2});
  CHECK(invariant_factors(char_group_structure(characters(FiniteAbelianGroup(shuffled(cyclic_group(6), 3))))) ==
        std::vector<std::int64_t>{6});
  auto partial = characters(FiniteAbelianGroup(cyclic_group(6)));
  partial.pop_back();
  CHECK_THROWS_AS(char_group_structure(partial), GroupoidError);
}

TEST_CASE("dual bundle examples", "[abelian]") {
  SECTION("trivial bundle") {
    const DualBundle d = dual_bundle(trivial_groupoid(4));
    CHECK(d.fibers.size() == 4);
    CHECK(d.total_size() == 4);
  }
  SECTION("abelianized S3 + A3") {
    const DualBundle d = dual_bundle(abelianize_groupoid(s3_a3_bundle()).groupoid());
    REQUIRE(d.fibers.size() == 2);
    std::multiset<std::size_t> sizes{d.fibers[0].characters.size(), d.fibers[1].characters.size()};
    CHECK(sizes == std::multiset<std::size_t>{2, 3});
    CHECK(d.total_size() == 5);
  }
  SECTION("one-object Klein group") {
    const DualBundle d = dual_bundle(one_object(klein_group()));
    REQUIRE(d.fibers.size() == 1);
    CHECK(d.fibers[0].characters.size() == 4);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(dual_bundle(test::s3()), GroupoidError);
    CHECK_THROWS_AS(dual_bundle(pair_groupoid(2)), GroupoidError);
  }
}
