#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "symfitch/errors.hpp"
#include "symfitch/random.hpp"
#include "symfitch/tree.hpp"

using namespace symfitch;
using namespace symfitch::testing;

TEST_CASE("explain on small trees") {
  SUBCASE("star with one colored edge") {
    const auto t = make_tree({"a", "b", "c"}, {"v"}, {{"a", "v", {"m"}}, {"b", "v", {}}, {"c", "v", {}}});
    const auto e = explain(t);
    CHECK(e == make_map({"a", "b", "c"}, {"m"}, {{"a", "b", {"m"}}, {"a", "c", {"m"}}}));
  }
  SUBCASE("star with empty labels") {
    const auto t = make_tree({"a", "b", "c"}, {"v"}, {{"a", "v", {}}, {"b", "v", {}}, {"c", "v", {}}}, {"m"});
    const auto e = explain(t);
    for (std::size_t x = 0; x < 3; ++x) {
      for (std::size_t y = x + 1; y < 3; ++y) CHECK(e.entry(x, y).empty());
    }
  }
  SUBCASE("caterpillar with colored inner edge") {
    const auto t = make_tree({"a", "b", "c", "d"}, {"u", "v"},
                             {{"a", "u", {}}, {"b", "u", {}}, {"u", "v", {"m"}}, {"c", "v", {}}, {"d", "v", {}}});
    const auto expected = make_map({"a", "b", "c", "d"}, {"m"},
                                   {{"a", "c", {"m"}}, {"a", "d", {"m"}}, {"b", "c", {"m"}}, {"b", "d", {"m"}}});
    CHECK(explain(t) == expected);
  }
  SUBCASE("colored edges need not be transitive along paths") {
    // 1 on ab and bc but not on ac: the 1-edge is the pendant edge of b.
    const auto t = make_tree({"a", "b", "c"}, {"v"}, {{"a", "v", {}}, {"b", "v", {"1"}}, {"c", "v", {}}});
    const auto e = explain(t);
    CHECK(e.has(0, 1, 0));
    CHECK(e.has(1, 2, 0));
    CHECK_FALSE(e.has(0, 2, 0));
  }
  SUBCASE("a caller-supplied universe keeps extra colors") {
    const auto t = make_tree({"a", "b"}, {}, {{"a", "b", {"2"}}});
    const auto e = explain(t, ColorSet({"1", "2", "3"}));
    CHECK(e.colors().size() == 3);
    CHECK(e.entry(0, 1) == std::vector<std::size_t>{1});
  }
}

TEST_CASE("explain agrees with walking every path") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const auto t = random_labeled_tree(n, ColorSet(numbered_names(1 + seed % 4)), 0.25, seed);
    CHECK(named(explain(t)) == path_walk_explain(t));
  }
}

TEST_CASE("tree validation") {
  TreeDocument doc;
  doc.leaves = {"a", "b", "c"};
  doc.vertices = {"a", "b", "c", "u", "w"};
  doc.edges = {{"a", "u", {}}, {"b", "u", {}}, {"u", "w", {}}, {"c", "w", {}}};
  SUBCASE("degree-two vertex") {
    const auto r = validate_tree(doc);
    REQUIRE_FALSE(r.ok());
    CHECK(r.issues.front().code == "inner-degree");
  }
  SUBCASE("cycle") {
    doc.vertices = {"a", "b", "c", "u"};
    doc.edges = {{"a", "u", {}}, {"b", "u", {}}, {"c", "u", {}}, {"a", "b", {}}};
    CHECK_FALSE(validate_tree(doc).ok());
  }
  SUBCASE("disconnected") {
    doc.vertices = {"a", "b", "c", "d", "u"};
    doc.leaves = {"a", "b", "c", "d"};
    doc.edges = {{"a", "u", {}}, {"b", "u", {}}, {"c", "d", {}}};
    CHECK_FALSE(validate_tree(doc).ok());
  }
  SUBCASE("unknown color against a declared universe") {
    doc.vertices = {"a", "b", "c", "u"};
    doc.edges = {{"a", "u", {"9"}}, {"b", "u", {}}, {"c", "u", {}}};
    doc.colors = {"1"};
    CHECK_FALSE(validate_tree(doc).ok());
    CHECK_THROWS_AS(build_tree(doc), ValidationError);
  }
  SUBCASE("inner vertex of degree one") {
    doc.vertices = {"a", "b", "c", "u", "w"};
    doc.edges = {{"a", "u", {}}, {"b", "u", {}}, {"c", "u", {}}, {"w", "u", {}}};
    CHECK_FALSE(validate_tree(doc).ok());
  }
  SUBCASE("single leaf") {
    TreeDocument one;
    one.leaves = {"a"};
    one.vertices = {"a"};
    CHECK_FALSE(validate_tree(one).ok());
  }
}

TEST_CASE("documents round-trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = random_labeled_tree(2 + seed % 9, ColorSet(numbered_names(3)), 0.3, seed);
    const auto back = build_tree(to_document(t));
    CHECK(explain(back, t.colors()) == explain(t));
    CHECK(back.vertex_count() == t.vertex_count());
  }
}

TEST_CASE("to_document avoids leaf names for inner vertices") {
  const auto t = make_tree({"v1", "v2", "v3"}, {"x"}, {{"v1", "x", {}}, {"v2", "x", {}}, {"v3", "x", {}}});
  const auto doc = to_document(t);
  CHECK(doc.vertices.size() == 4);
  CHECK(doc.vertices.back() == "v4");
}

TEST_CASE("suppress_degree_two") {
  SUBCASE("nothing to do") {
    const auto t = random_labeled_tree(7, ColorSet(numbered_names(2)), 0.4, 3);
    const auto s = suppress_degree_two(t);
    CHECK(s.vertex_count() == t.vertex_count());
    CHECK(explain(s) == explain(t));
  }
  SUBCASE("chain a-u-v-b merges labels") {
    Topology topo;
    topo.leaf_count = 2;
    topo.vertex_count = 4;
    topo.add_edge(0, 2);
    topo.add_edge(2, 3);
    topo.add_edge(3, 1);
    const LabeledTree chain(LeafSet({"a", "b"}), ColorSet({"1", "2"}), topo, {{0}, {}, {1}},
                            TreeShape::kAllowDegreeTwo);
    const auto s = suppress_degree_two(chain);
    CHECK(s.edge_count() == 1);
    CHECK(s.label(0) == ColorLabel{0, 1});
    CHECK(explain(s).entry(0, 1) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("pruning a star leaf leaves one edge") {
    const auto t = make_tree({"a", "b", "c"}, {"v"}, {{"a", "v", {"m"}}, {"b", "v", {}}, {"c", "v", {}}});
    const auto pruned = prune_leaves(t, LeafSet({"a", "b"}));
    CHECK(pruned.shape() == TreeShape::kAllowDegreeTwo);
    const auto s = suppress_degree_two(pruned);
    CHECK(s.vertex_count() == 2);
    CHECK(explain(s).entry(0, 1) == std::vector<std::size_t>{0});
  }
}

TEST_CASE("restriction commutes with pruning") {
  std::mt19937_64 gen(11);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t k = 1 + seed % 3;
    const auto t = random_labeled_tree(n, ColorSet(numbered_names(k)), 0.35, seed);
    std::vector<std::string> keep;
    for (const auto& x : t.leaves()) {
      if (gen() % 3 != 0) keep.push_back(x);
    }
    while (keep.size() < 2) {
      keep = {t.leaves()[0], t.leaves()[n - 1]};
    }
    std::vector<std::string> colors;
    for (const auto& c : t.colors()) {
      if (gen() % 2) colors.push_back(c);
    }
    const LeafSet sub_leaves(keep);
    const ColorSet sub_colors(colors);
    const auto lhs = restrict(explain(t), sub_leaves, sub_colors);
    const auto rhs = explain(suppress_degree_two(prune_leaves(restrict_labels(t, sub_colors), sub_leaves)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contract_edge") {
  const auto t = make_tree({"a", "b", "c", "d"}, {"u", "v"},
                           {{"a", "u", {}}, {"b", "u", {}}, {"u", "v", {"m"}}, {"c", "v", {}}, {"d", "v", {}}});
  std::size_t inner = t.edge_count();
  for (std::size_t e = 0; e < t.edge_count(); ++e) {
    if (t.topology().is_inner_edge(e)) inner = e;
  }
  REQUIRE(inner < t.edge_count());
  const auto c = contract_edge(t, inner);
  CHECK(c.vertex_count() == 5);
  CHECK(c.edge_count() == 4);
  CHECK(diameter(c.topology()) == 2);
  CHECK_THROWS_AS(contract_edge(t, 0), PreconditionError);
}

TEST_CASE("diameter") {
  const auto t = make_tree({"a", "b", "c", "d"}, {"u", "v"},
                           {{"a", "u", {}}, {"b", "u", {}}, {"u", "v", {}}, {"c", "v", {}}, {"d", "v", {}}}, {"m"});
  CHECK(diameter(t.topology()) == 3);
}
