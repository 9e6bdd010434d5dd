#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "symfitch/compat.hpp"
#include "symfitch/errors.hpp"
#include "symfitch/neighborhoods.hpp"
#include "symfitch/random.hpp"

using namespace symfitch;
using namespace symfitch::testing;

TEST_CASE("complementary neighborhoods of the hourglass") {
  const auto h = hourglass();
  CHECK(complementary_neighborhood(h, "1", "a") == mask(h, {"a", "c"}));
  CHECK(complementary_neighborhood(h, "1", "c") == mask(h, {"a", "c"}));
  CHECK(complementary_neighborhood(h, "1", "b") == mask(h, {"b", "d"}));
  CHECK(complementary_neighborhood(h, "1", "d") == mask(h, {"b", "d"}));
  CHECK(complementary_neighborhood(h, "2", "a") == mask(h, {"a", "b"}));
  CHECK(complementary_neighborhood(h, "2", "b") == mask(h, {"a", "b"}));
  CHECK(complementary_neighborhood(h, "2", "c") == mask(h, {"c", "d"}));
  CHECK(complementary_neighborhood(h, "2", "d") == mask(h, {"c", "d"}));
  CHECK_THROWS_AS(complementary_neighborhood(h, "3", "a"), ValidationError);
  CHECK_THROWS_AS(complementary_neighborhood(h, "1", "z"), ValidationError);

  const auto ns1 = neighborhood_system(h, "1");
  CHECK(ns1.members == std::vector<LeafMask>{mask(h, {"a", "c"}), mask(h, {"b", "d"})});
  const auto ns2 = neighborhood_system(h, "2");
  CHECK(ns2.members == std::vector<LeafMask>{mask(h, {"a", "b"}), mask(h, {"c", "d"})});
  CHECK_FALSE(is_partition(ns1).has_value());
  CHECK_FALSE(is_partition(ns2).has_value());
}

TEST_CASE("the empty map has one neighborhood") {
  const auto e = make_map({"a", "b", "c"}, {"m"}, {});
  for (const auto& y : e.leaves()) CHECK(complementary_neighborhood(e, "m", y) == 0b111);
  const auto ns = neighborhood_system(e, "m");
  CHECK(ns.members == std::vector<LeafMask>{0b111});
  CHECK_FALSE(is_partition(ns).has_value());
  CHECK(subsplit_system(e, 0).empty());
  const auto full = full_subsplit_systems(e);
  CHECK(full.all.empty());
  CHECK(full.nontrivial.empty());
}

TEST_CASE("partition witnesses") {
  NeighborhoodSystem sys;
  sys.ground = 0b111;
  sys.members = {0b011, 0b101, 0b100};  // {a,b}, {a,c}, {c}
  const auto v = is_partition(sys);
  REQUIRE(v.has_value());
  CHECK(v->kind == PartitionViolation::Kind::kOverlap);
  CHECK(v->first == 0b011);
  CHECK(v->second == 0b101);
  CHECK(v->leaf == 0);

  sys.members = {0b011};
  const auto u = is_partition(sys);
  REQUIRE(u.has_value());
  CHECK(u->kind == PartitionViolation::Kind::kUncovered);
  CHECK(u->leaf == 2);

  sys.members = {0b111};
  CHECK_FALSE(is_partition(sys).has_value());
}

TEST_CASE("subsplit systems of the hourglass") {
  const auto h = hourglass();
  const auto s1 = subsplit_system(h, 0);
  CHECK(s1.subsplits() == std::vector<Subsplit>{Subsplit(mask(h, {"a", "c"}), mask(h, {"b", "d"}))});
  const auto s2 = subsplit_system(h, 1);
  CHECK(s2.subsplits() == std::vector<Subsplit>{Subsplit(mask(h, {"a", "b"}), mask(h, {"c", "d"}))});
  const auto full = full_subsplit_systems(h);
  CHECK(full.all == full.nontrivial);
  CHECK(full.all.size() == 2);
  CHECK(full.all.contains(Subsplit(mask(h, {"a", "b"}), mask(h, {"c", "d"}))));
  CHECK(full.all.contains(Subsplit(mask(h, {"a", "c"}), mask(h, {"b", "d"}))));
  CHECK(full.all.colors_of(Subsplit(mask(h, {"a", "b"}), mask(h, {"c", "d"}))) == std::vector<std::size_t>{1});
}

TEST_CASE("complete bipartite monochromatic map") {
  const auto m = make_map({"a", "b", "c", "d"}, {"m"},
                          {{"a", "c", {"m"}}, {"a", "d", {"m"}}, {"b", "c", {"m"}}, {"b", "d", {"m"}}});
  const auto full = full_subsplit_systems(m);
  CHECK(full.nontrivial.subsplits() == std::vector<Subsplit>{Subsplit(mask(m, {"a", "b"}), mask(m, {"c", "d"}))});
}

TEST_CASE("neighborhoods match a naive computation") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto map = random_symmetric_map(n, ColorSet(numbered_names(1 + seed % 3)), 0.5, seed);
    for (std::size_t m = 0; m < map.color_count(); ++m) {
      const auto sys = neighborhood_system(map, m);
      std::set<std::set<std::size_t>> lib;
      LeafMask covered = 0;
      for (LeafMask member : sys.members) {
        CHECK(member != 0);
        covered |= member;
        lib.insert(to_set(member));
      }
      CHECK(covered == all_leaves(n));
      const auto naive = naive_neighborhoods(map, m);
      CHECK(lib == naive);
      const bool partition = !is_partition(sys).has_value();
      CHECK(partition == naive_is_partition(naive, n));
      CHECK(partition == neighborhoods_self_consistent(map, m));
    }
  }
}

TEST_CASE("subsplit systems of tree maps are displayed by the tree") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 3 + seed % 8;
    const auto t = random_labeled_tree(n, ColorSet(numbered_names(1 + seed % 4)), 0.3, seed);
    const auto full = full_subsplit_systems(explain(t));
    for (const auto& s : full.all.subsplits()) {
      CHECK(displays(t.topology(), s));
      CHECK(naive_displays(t.topology(), to_set(s.first()), to_set(s.second())));
    }
    for (const auto& s : full.all.subsplits()) {
      if (!full.nontrivial.contains(s)) CHECK(s.is_trivial());
    }
  }
}
