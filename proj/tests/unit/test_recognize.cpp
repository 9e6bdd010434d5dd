#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "symfitch/errors.hpp"
#include "symfitch/oracle.hpp"
#include "symfitch/random.hpp"
#include "symfitch/recognize.hpp"

using namespace symfitch;
using namespace symfitch::testing;

using Decision = RecognitionResult::Decision;

TEST_CASE("hourglass is rejected with the conflicting quartets") {
  const auto h = hourglass();
  const auto r = recognize(h);
  CHECK(r.decision == Decision::kNotFitch);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.non_partition.has_value());
  REQUIRE(r.conflicting_pair.has_value());
  CHECK(r.conflicting_pair->first == Subsplit(mask(h, {"a", "b"}), mask(h, {"c", "d"})));
  CHECK(r.conflicting_pair->second == Subsplit(mask(h, {"a", "c"}), mask(h, {"b", "d"})));
  CHECK_FALSE(build_explaining_tree(h).has_value());
  CHECK_FALSE(brute_force_is_fitch(h).has_value());
}

TEST_CASE("two leaves are always accepted") {
  const auto m = make_map({"a", "b"}, {"1", "2"}, {{"a", "b", {"1", "2"}}});
  const auto r = recognize(m);
  REQUIRE(r.decision == Decision::kFitch);
  CHECK(r.witness->edge_count() == 1);
  CHECK(explain(*r.witness, m.colors()) == m);
  CHECK_THROWS_AS(recognize(SymmetricMap(LeafSet({"a"}), ColorSet({"1"}))), ValidationError);
}

TEST_CASE("empty map gives an all-empty tree") {
  const auto m = make_map({"a", "b", "c", "d", "e"}, {"m"}, {});
  const auto t = build_explaining_tree(m);
  REQUIRE(t.has_value());
  for (const auto& l : t->labels()) CHECK(l.empty());
  CHECK(explain(*t) == m);
}

TEST_CASE("caterpillar map round-trips") {
  const auto m = make_map({"a", "b", "c", "d"}, {"m"},
                          {{"a", "c", {"m"}}, {"a", "d", {"m"}}, {"b", "c", {"m"}}, {"b", "d", {"m"}}});
  const auto t = build_explaining_tree(m);
  REQUIRE(t.has_value());
  CHECK(explain(*t) == m);
}

TEST_CASE("non-partition neighborhoods are reported") {
  const auto m = make_map({"a", "b", "c"}, {"m"}, {{"b", "c", {"m"}}});
  const auto r = recognize(m);
  CHECK(r.decision == Decision::kNotFitch);
  REQUIRE(r.non_partition.has_value());
  CHECK(r.non_partition->color == 0);
  CHECK(r.non_partition->violation.kind == PartitionViolation::Kind::kOverlap);
  CHECK_THROWS_AS(build_explaining_tree(m), PreconditionError);
}

TEST_CASE("tree maps are accepted and the witness is sound") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const std::size_t k = 1 + seed % 4;
    const double density = std::vector<double>{0.1, 0.3, 0.6}[seed % 3];
    const auto t = random_labeled_tree(n, ColorSet(numbered_names(k)), density, seed);
    const auto map = explain(t);
    const auto r = recognize(map);
    REQUIRE(r.decision == Decision::kFitch);
    CHECK(explain(*r.witness, map.colors()) == map);
    CHECK(named(explain(*r.witness)) == path_walk_explain(*r.witness));
    CHECK(validate_topology(r.witness->topology(), TreeShape::kPhylogenetic).ok());
    if (n >= 3) {
      for (const auto& s : full_subsplit_systems(map).all.subsplits()) CHECK(displays(r.witness->topology(), s));
    }
  }
}

TEST_CASE("recognition agrees with brute force on small random maps") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 3 + seed % 3;
    const auto map = random_symmetric_map(n, ColorSet(numbered_names(1 + seed % 2)), 0.5, seed);
    const bool accepted = recognize(map).decision == Decision::kFitch;
    CHECK(accepted == brute_force_is_fitch(map).has_value());
  }
}

TEST_CASE("full and non-trivial subsplit systems are compatible together") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 5;
    auto map = explain(random_labeled_tree(n, ColorSet(numbered_names(3)), 0.3, seed));
    map = perturb_map(map, seed % 3, seed);
    bool partitions = true;
    for (std::size_t m = 0; m < map.color_count(); ++m) {
      partitions = partitions && !is_partition(neighborhood_system(map, m)).has_value();
    }
    if (!partitions) continue;
    const auto full = full_subsplit_systems(map);
    CHECK(exact_compatibility(full.all).compatible() == exact_compatibility(full.nontrivial).compatible());
  }
}

TEST_CASE("labels follow the neighborhood partition") {
  const auto t = random_labeled_tree(9, ColorSet(numbered_names(3)), 0.3, 77);
  const auto map = explain(t);
  const auto relabeled = label_by_neighborhoods(map, t.topology());
  CHECK(explain(relabeled) == map);
}

TEST_CASE("resource limits surface as undecided") {
  const auto t = random_labeled_tree(10, ColorSet(numbered_names(3)), 0.3, 4);
  SearchOptions o;
  o.max_leaves = 4;
  const auto r = recognize(explain(t), o);
  REQUIRE(r.nontrivial_subsplits > 0);
  CHECK(r.decision == Decision::kUndecided);
  CHECK_FALSE(r.note.empty());
  CHECK_FALSE(r.witness.has_value());
  CHECK_THROWS_AS(build_explaining_tree(explain(t), o), ResourceLimitError);
  o.max_leaves = 16;
  CHECK(recognize(explain(t), o).decision == Decision::kFitch);
}
