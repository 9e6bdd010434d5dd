#include "symfitch/mono.hpp"

#include <algorithm>

namespace symfitch {

std::size_t ColorGraph::edge_count() const {
  std::size_t twice = 0;
  for (LeafMask row : adjacency) twice += static_cast<std::size_t>(leaf_count_of(row));
  return twice / 2;
}

ColorGraph graph_representation(const SymmetricMap& map, std::size_t color) {
  ColorGraph g;
  g.vertex_count = map.leaf_count();
  g.color = color;
  g.adjacency.resize(map.leaf_count());
  for (std::size_t x = 0; x < map.leaf_count(); ++x) g.adjacency[x] = map.row(color, x);
  return g;
}

ColorGraph graph_representation(const SymmetricMap& map, std::string_view color) {
  return graph_representation(map, map.colors().require(color));
}

SymmetricMap map_from_graph(const ColorGraph& g, const LeafSet& leaves, const std::string& color) {
  SymmetricMap map(leaves, ColorSet({color}));
  for (std::size_t x = 0; x < g.vertex_count; ++x) {
    for_each_leaf(g.adjacency[x], [&](std::size_t y) {
      if (x < y) map.insert(x, y, 0);
    });
  }
  return map;
}

std::optional<K1K2Witness> has_k1_plus_k2(const ColorGraph& g) {
  const std::size_t n = g.vertex_count;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool ab = g.adjacent(a, b);
        const bool ac = g.adjacent(a, c);
        const bool bc = g.adjacent(b, c);
        if (ab + ac + bc != 1) continue;
        if (bc) return K1K2Witness{a, b, c};
        if (ac) return K1K2Witness{b, a, c};
        return K1K2Witness{c, a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<IndependentSetFamily> multipartite_parts(const ColorGraph& g) {
  const LeafMask all = all_leaves(g.vertex_count);
  IndependentSetFamily family;
  LeafMask remaining = all;
  while (remaining != 0) {
    const std::size_t v = lowest_leaf(remaining);
    const LeafMask part = (all & ~g.adjacency[v]) | leaf_bit(v);
    if ((part & ~remaining) != 0) return std::nullopt;
    bool ok = true;
    // Independent inside, completely joined outside.
    for_each_leaf(part, [&](std::size_t u) { ok = ok && g.adjacency[u] == (all & ~part); });
    if (!ok) return std::nullopt;
    family.parts.push_back(part);
    if (leaf_count_of(part) >= 2) family.parts_ge_two.push_back(part);
    remaining &= ~part;
  }
  return family;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> first_pair_with(const SymmetricMap& map,
                                                                   std::size_t color) {
  for (std::size_t x = 0; x < map.leaf_count(); ++x) {
    LeafMask later = map.row(color, x) & ~all_leaves(x + 1);
    if (later != 0) return std::make_pair(x, lowest_leaf(later));
  }
  return std::nullopt;
}

void require_at_most_one_color_per_entry(const SymmetricMap& map) {
  for (std::size_t x = 0; x < map.leaf_count(); ++x) {
    for (std::size_t y = x + 1; y < map.leaf_count(); ++y) {
      if (map.entry_size(x, y) >= 2) {
        throw PreconditionError("pair {" + map.leaves()[x] + "," + map.leaves()[y] +
                                "} carries more than one color");
      }
    }
  }
}

}  // namespace

RestrictedDecision is_restricted_fitch(const SymmetricMap& map) {
  require_at_most_one_color_per_entry(map);
  RestrictedDecision d;
  const auto used = map.used_colors();
  if (used.size() >= 2) {
    d.two_colors = RestrictedDecision::TwoColors{used[0], used[1], *first_pair_with(map, used[0]),
                                                 *first_pair_with(map, used[1])};
    return d;
  }
  if (used.empty()) {
    d.accepted = true;
    return d;
  }
  d.color = used[0];
  d.k1_plus_k2 = has_k1_plus_k2(graph_representation(map, used[0]));
  d.accepted = !d.k1_plus_k2.has_value();
  return d;
}

namespace {

std::string format_set(const LeafSet& leaves, LeafMask m) {
  std::string s = "{";
  bool first = true;
  for_each_leaf(m, [&](std::size_t i) {
    if (!first) s += ",";
    s += leaves[i];
    first = false;
  });
  return s + "}";
}

}  // namespace

TreeFamilyDescription least_resolved_trees(const SymmetricMap& map) {
  const std::size_t n = map.leaf_count();
  if (n < 3) throw PreconditionError("least-resolved trees need at least three leaves");
  require_at_most_one_color_per_entry(map);
  const auto used = map.used_colors();
  if (used.size() >= 2) {
    throw PreconditionError("map is not monochromatic: colors '" + map.colors()[used[0]] + "' and '" +
                            map.colors()[used[1]] + "' are both in use");
  }

  TreeFamilyDescription out;
  ColorGraph g;
  g.vertex_count = n;
  g.adjacency.assign(n, 0);
  if (!used.empty()) {
    out.color = used[0];
    g = graph_representation(map, used[0]);
    if (auto w = has_k1_plus_k2(g)) {
      throw RejectionError("color graph contains an induced K1+K2 on " + map.leaves()[w->isolated] + ", " +
                               map.leaves()[w->edge_u] + ", " + map.leaves()[w->edge_v],
                           *w);
    }
  }
  out.independent_sets = *multipartite_parts(g);
  const auto& big = out.independent_sets.parts_ge_two;
  const ColorLabel m_label = out.color ? ColorLabel{*out.color} : ColorLabel{};
  const std::string m_name = out.color ? "{" + map.colors()[*out.color] + "}" : "{}";

  Topology t;
  t.leaf_count = n;
  t.vertex_count = n;
  std::vector<ColorLabel> labels;
  if (big.empty()) {
    out.star_case = true;
    const std::size_t center = t.add_vertex();
    for (std::size_t x = 0; x < n; ++x) {
      t.add_edge(x, center);
      labels.push_back(m_label);
    }
    out.constraints = {
        "star tree on all " + std::to_string(n) + " leaves",
        "every edge labeled " + m_name + " except at most one edge labeled {}",
    };
  } else {
    std::vector<std::size_t> part_vertex;
    for (std::size_t i = 0; i < big.size(); ++i) part_vertex.push_back(t.add_vertex());
    LeafMask covered = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      covered |= big[i];
      for_each_leaf(big[i], [&](std::size_t x) {
        t.add_edge(x, part_vertex[i]);
        labels.emplace_back();
      });
    }
    const LeafMask singles = all_leaves(n) & ~covered;
    for_each_leaf(singles, [&](std::size_t x) {
      t.add_edge(x, part_vertex[0]);
      labels.push_back(m_label);
    });
    for (std::size_t i = 1; i < big.size(); ++i) {
      t.add_edge(part_vertex[0], part_vertex[i]);
      labels.push_back(m_label);
    }
    out.constraints.push_back("exactly " + std::to_string(big.size()) + " inner vertices");
    for (LeafMask part : big) {
      out.constraints.push_back("leaves " + format_set(map.leaves(), part) +
                                " share one inner neighbor via edges labeled {}");
    }
    if (singles != 0) {
      out.constraints.push_back("leaves " + format_set(map.leaves(), singles) +
                                " attach via edges labeled " + m_name);
    }
    out.constraints.push_back("every inner edge labeled " + m_name +
                              "; inner edges may be arranged in any tree shape");
  }
  out.inner_vertex_count = t.vertex_count - n;
  out.vertex_count = t.vertex_count;
  out.representative = LabeledTree(map.leaves(), map.colors(), std::move(t), std::move(labels));
  return out;
}

std::vector<std::string> least_resolved_violations(const LabeledTree& tree, const SymmetricMap& map) {
  const auto used = map.used_colors();
  if (used.size() >= 2) throw PreconditionError("map is not monochromatic");
  ColorGraph g;
  g.vertex_count = map.leaf_count();
  g.adjacency.assign(map.leaf_count(), 0);
  std::optional<std::string> m_name;
  if (!used.empty()) {
    g = graph_representation(map, used[0]);
    m_name = map.colors()[used[0]];
  }
  auto family = multipartite_parts(g);
  if (!family) throw PreconditionError("map is not a Fitch map");
  if (tree.leaves() != map.leaves()) throw PreconditionError("tree and map have different leaves");

  const Topology& t = tree.topology();
  auto is_m_label = [&](std::size_t e) {
    const auto& l = tree.label(e);
    return m_name && l.size() == 1 && tree.colors()[l[0]] == *m_name;
  };
  const auto adj = t.adjacency();
  auto neighbor = [&](std::size_t x) {
    const std::size_t e = adj[x][0];
    return std::make_pair(e, t.edges[e].first == x ? t.edges[e].second : t.edges[e].first);
  };

  std::vector<std::string> violations;
  const std::size_t inner = t.vertex_count - t.leaf_count;
  if (family->parts_ge_two.empty()) {
    std::size_t non_m = 0;
    for (std::size_t e = 0; e < t.edges.size(); ++e) non_m += is_m_label(e) ? 0 : 1;
    if (inner != 1 || non_m > 1) violations.emplace_back("1");
    return violations;
  }
  if (inner != family->parts_ge_two.size()) violations.emplace_back("2a");
  LeafMask covered = 0;
  bool b_ok = true;
  for (LeafMask part : family->parts_ge_two) {
    covered |= part;
    const std::size_t v = neighbor(lowest_leaf(part)).second;
    for_each_leaf(part, [&](std::size_t x) { b_ok = b_ok && neighbor(x).second == v; });
  }
  if (!b_ok) violations.emplace_back("2b");
  bool c_ok = true;
  bool d_ok = true;
  for (std::size_t x = 0; x < t.leaf_count; ++x) {
    const std::size_t e = neighbor(x).first;
    if ((covered >> x) & 1U) {
      c_ok = c_ok && tree.label(e).empty();
    } else {
      d_ok = d_ok && is_m_label(e);
    }
  }
  if (!c_ok) violations.emplace_back("2c");
  if (!d_ok) violations.emplace_back("2d");
  bool e_ok = true;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (t.is_inner_edge(e)) e_ok = e_ok && is_m_label(e);
  }
  if (!e_ok) violations.emplace_back("2e");
  return violations;
}

}  // namespace symfitch
