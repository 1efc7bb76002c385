#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "groupoidkit/document.hpp"
#include "groupoidkit/generators.hpp"
#include "groupoidkit/quotients.hpp"
#include "support.hpp"

using namespace gk;
using gk::test::arrow;

namespace {

// A random subgroup action on cosets, built from the library.
GroupAction sample_action(std::uint64_t seed) {
  const auto names = library_group_names();
  const FiniteGroup g = library_group(names[seed % names.size()]);
  const auto subs = all_subgroups(g);
  const auto& acting = subs[(seed / 7) % subs.size()];
  const auto& stab = subs[(seed / 3) % subs.size()];
  return coset_action(g, acting, stab);
}

}  // namespace

TEST_CASE("transformation groupoid examples", "[generators]") {
  SECTION("trivial group on n points") {
    const GroupAction a{cyclic_group(1), {"a", "b", "c"}, {0, 1, 2}};
    const FiniteGroupoid g = transformation_groupoid(a);
    CHECK(g.size() == 3);
    CHECK(g.units().size() == 3);
    CHECK(isotropy(g) == g.units());
  }
  SECTION("Z/2 swapping two points is the pair groupoid") {
    const GroupAction a{cyclic_group(2), {"a", "b"}, {0, 1, 1, 0}};
    const FiniteGroupoid g = transformation_groupoid(a);
    CHECK(g.size() == 4);
    CHECK(validate(g).ok());
    CHECK(is_effective(g));
    CHECK(fixed_points(g).empty());
    // Exactly one arrow between each ordered pair of points.
    std::set<std::pair<Arrow, Arrow>> ends;
    for (Arrow x = 0; x < 4; ++x) ends.emplace(g.src(x), g.rng(x));
    CHECK(ends.size() == 4);
  }
  SECTION("Klein cross") {
    const FiniteGroupoid g = klein_cross();
    CHECK(g.size() == 20);
    CHECK(g.units().size() == 5);
    CHECK(validate(g).ok());
    CHECK(g.rng(arrow(g, "(s,x+)")) == arrow(g, "(e,x-)"));
    CHECK(g.rng(arrow(g, "(s,y+)")) == arrow(g, "(e,y+)"));
  }
  SECTION("invalid actions are rejected") {
    const GroupAction bad{cyclic_group(2), {"a", "b"}, {0, 1, 0, 0}};
    CHECK_FALSE(bad.check().empty());
    CHECK_THROWS_AS(transformation_groupoid(bad), std::invalid_argument);
  }
}

TEST_CASE("transformation groupoid fixed points are the global fixed points", "[generators][property]") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const GroupAction a = sample_action(seed);
    REQUIRE(a.check().empty());
    const FiniteGroupoid g = transformation_groupoid(a);
    CHECK(validate(g).ok());
    CHECK(g.size() == a.group.order() * a.points.size());

    ArrowSet expected;
    for (int x = 0; x < static_cast<int>(a.points.size()); ++x) {
      bool fixed = true;
      for (int h = 0; h < static_cast<int>(a.group.order()); ++h) fixed &= a.apply(h, x) == x;
      if (fixed) expected.push_back(static_cast<Arrow>(a.group.identity() * a.points.size() + x));
    }
    CHECK(fixed_points(g) == expected);
    // Isotropy at a point is its stabilizer.
    for (Arrow x : g.units()) {
      std::size_t stabilizer = 0;
      for (int h = 0; h < static_cast<int>(a.group.order()); ++h)
        stabilizer += a.apply(h, static_cast<int>(x % a.points.size())) == static_cast<int>(x % a.points.size());
      CHECK(g.isotropy_at(x).size() == stabilizer);
    }
  }
}

TEST_CASE("group bundle examples", "[generators]") {
  const FiniteGroupoid one = group_bundle({{"*", symmetric_group3()}});
  CHECK(one == one_object(symmetric_group3()));
  const FiniteGroupoid b = s3_a3_bundle();
  CHECK(b.size() == 9);
  CHECK(b.units().size() == 2);
  CHECK(is_group_bundle(b));
  CHECK(group_bundle({}).empty());
  CHECK_THROWS_AS(group_bundle({{"x", FiniteGroup({"e", "g"}, {0, 1, 1, 1})}}), std::invalid_argument);
}

TEST_CASE("trivial and pair groupoids", "[generators]") {
  CHECK(trivial_groupoid(0).empty());
  CHECK(validate(trivial_groupoid(4)).ok());
  for (int n = 1; n <= 5; ++n) {
    const FiniteGroupoid p = pair_groupoid(n);
    CHECK(p.size() == static_cast<std::size_t>(n * n));
    CHECK(validate(p).ok());
    CHECK(p.units() == trivial_groupoid(n).units());
  }
}

TEST_CASE("random_groupoid examples", "[generators]") {
  const FiniteGroupoid tiny = random_groupoid(0, 1);
  CHECK(tiny.size() == 1);
  CHECK(tiny.units().size() == 1);

  const FiniteGroupoid g = random_groupoid(1, 20);
  CHECK(g.size() <= 20);
  CHECK(validate(g).ok());

  CHECK(encode(random_groupoid(42, 60)).dump() == encode(random_groupoid(42, 60)).dump());
  CHECK_THROWS_AS(random_groupoid(0, 0), std::invalid_argument);
}

TEST_CASE("random groupoids respect the budget and validate", "[generators][property]") {
  std::set<std::size_t> sizes;
  std::size_t with_fixed = 0, non_bundle = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FiniteGroupoid g = random_groupoid(seed, 60);
    CHECK(g.size() >= 1);
    CHECK(g.size() <= 60);
    CHECK(validate(g).ok());
    sizes.insert(g.size());
    with_fixed += !fixed_points(g).empty();
    non_bundle += !is_group_bundle(g);
  }
  // The corpus is varied: many sizes, with and without fixed points.
  CHECK(sizes.size() >= 20);
  CHECK(with_fixed >= 50);
  CHECK(non_bundle >= 50);
}

TEST_CASE("random abelian bundles", "[generators][property]") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const FiniteGroupoid g = random_abelian_bundle(seed);
    CHECK(validate(g).ok());
    CHECK(is_abelian_group_bundle(g));
    CHECK(g.units().size() <= 8);
    for (Arrow x : g.units()) CHECK(g.isotropy_at(x).size() <= 12);
  }
}

TEST_CASE("abelian group library", "[generators]") {
  const auto groups = abelian_groups_up_to(64);
  for (const auto& g : groups) {
    CHECK(g.check_axioms().empty());
    CHECK(g.is_abelian());
  }
  // Orders 1..64: sum over n of the product of partition numbers of n's prime exponents.
  auto partitions = [](int e) {
    std::vector<std::size_t> p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= e; ++part)
      for (int k = part; k <= e; ++k) p[k] += p[k - part];
    return p[e];
  };
  std::size_t expected = 0;
  for (int n = 1; n <= 64; ++n) {
    std::size_t count = 1;
    int m = n;
    for (int q = 2; m > 1; ++q) {
      int e = 0;
      for (; m % q == 0; m /= q) ++e;
      count *= partitions(e);
    }
    expected += count;
  }
  CHECK(groups.size() == expected);
  CHECK(expected == 117);
}

TEST_CASE("relabel keeps the structure", "[generators]") {
  const FiniteGroupoid k = klein_cross();
  const FiniteGroupoid r = relabel(k, "k.");
  CHECK(r.label(0) == "k." + k.label(0));
  CHECK(r.comp_table() == k.comp_table());
}
