#include "symfitch/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace symfitch {

std::vector<std::vector<std::size_t>> Topology::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].push_back(e);
    adj[edges[e].second].push_back(e);
  }
  return adj;
}

std::vector<LeafMask> Topology::edge_sides() const {
  std::vector<LeafMask> sides(edges.size(), 0);
  if (vertex_count == 0) return sides;
  const auto adj = adjacency();
  // Iterative DFS from vertex 0; below[v] = leaves in the subtree under v.
  std::vector<LeafMask> below(vertex_count, 0);
  std::vector<std::size_t> parent_edge(vertex_count, edges.size());
  std::vector<std::size_t> order;
  order.reserve(vertex_count);
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t e : adj[v]) {
      std::size_t w = edges[e].first == v ? edges[e].second : edges[e].first;
      if (seen[w]) continue;
      seen[w] = true;
      parent_edge[w] = e;
      stack.push_back(w);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    if (is_leaf(v)) below[v] |= leaf_bit(v);
    if (parent_edge[v] == edges.size()) continue;
    const auto& [a, b] = edges[parent_edge[v]];
    std::size_t parent = a == v ? b : a;
    below[parent] |= below[v];
  }
  const LeafMask all = leaves_mask();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    // The child endpoint of e is the one whose parent edge is e.
    sides[e] = parent_edge[v] == e ? below[v] : (all & ~below[u]);
  }
  return sides;
}

ValidationReport validate_topology(const Topology& t, TreeShape shape) {
  ValidationReport report;
  if (t.leaf_count < 2) report.add("too-few-leaves", "a tree needs at least two leaves");
  if (t.leaf_count > kMaxLeaves) report.add("too-many-leaves", "too many leaves");
  if (t.vertex_count < t.leaf_count) {
    report.add("vertex-count", "fewer vertices than leaves");
    return report;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen_edges;
  bool endpoints_ok = true;
  for (const auto& [u, v] : t.edges) {
    if (u >= t.vertex_count || v >= t.vertex_count) {
      report.add("bad-edge", "edge endpoint out of range");
      endpoints_ok = false;
      continue;
    }
    if (u == v) report.add("self-loop", "edge joins a vertex to itself");
    if (!seen_edges.insert(std::minmax(u, v)).second) report.add("multi-edge", "duplicate edge");
  }
  if (!endpoints_ok) return report;
  if (t.edges.size() + 1 != t.vertex_count) {
    report.add("not-a-tree", "edge count must be vertex count minus one");
  }
  const auto adj = t.adjacency();
  if (t.vertex_count > 0) {
    std::vector<bool> seen(t.vertex_count, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : adj[v]) {
        std::size_t w = t.edges[e].first == v ? t.edges[e].second : t.edges[e].first;
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != t.vertex_count) report.add("disconnected", "tree is not connected");
  }
  const std::size_t min_inner = shape == TreeShape::kPhylogenetic ? 3 : 2;
  for (std::size_t v = 0; v < t.vertex_count; ++v) {
    const std::size_t deg = adj[v].size();
    if (t.is_leaf(v)) {
      if (deg != 1) {
        report.add("leaf-degree", "leaf vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
      }
    } else if (deg == 1) {
      report.add("unlisted-leaf", "inner vertex " + std::to_string(v) + " has degree 1");
    } else if (deg < min_inner) {
      report.add("inner-degree", "inner vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
    }
  }
  return report;
}

std::size_t diameter(const Topology& t) {
  if (t.vertex_count == 0) return 0;
  const auto adj = t.adjacency();
  auto farthest = [&](std::size_t src) {
    std::vector<std::size_t> dist(t.vertex_count, t.vertex_count);
    std::vector<std::size_t> queue{src};
    dist[src] = 0;
    std::pair<std::size_t, std::size_t> best{src, 0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t v = queue[i];
      if (dist[v] > best.second) best = {v, dist[v]};
      for (std::size_t e : adj[v]) {
        std::size_t w = t.edges[e].first == v ? t.edges[e].second : t.edges[e].first;
        if (dist[w] == t.vertex_count) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return best;
  };
  return farthest(farthest(0).first).second;
}

LabeledTree::LabeledTree(LeafSet leaves, ColorSet colors, Topology topology,
                         std::vector<ColorLabel> labels, TreeShape shape)
    : leaves_(std::move(leaves)),
      colors_(std::move(colors)),
      topology_(std::move(topology)),
      labels_(std::move(labels)),
      shape_(shape) {
  ValidationReport report = validate_topology(topology_, shape_);
  if (topology_.leaf_count != leaves_.size()) {
    report.add("leaf-count", "topology has " + std::to_string(topology_.leaf_count) +
                                 " leaves but the leaf set has " + std::to_string(leaves_.size()));
  }
  if (labels_.size() != topology_.edges.size()) {
    report.add("missing-label", "every edge needs a label entry");
  }
  for (auto& label : labels_) {
    std::sort(label.begin(), label.end());
    label.erase(std::unique(label.begin(), label.end()), label.end());
    if (!label.empty() && label.back() >= colors_.size()) {
      report.add("unknown-color", "edge label cites a color outside the color set");
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));
}

SymmetricMap explain(const LabeledTree& tree) { return explain(tree, tree.colors()); }

SymmetricMap explain(const LabeledTree& tree, const ColorSet& universe) {
  if (tree.shape() != TreeShape::kPhylogenetic) {
    auto report = validate_topology(tree.topology(), TreeShape::kPhylogenetic);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  std::vector<std::size_t> to_universe(tree.colors().size());
  for (std::size_t m = 0; m < tree.colors().size(); ++m) {
    to_universe[m] = universe.require(tree.colors()[m]);
  }

  const Topology& t = tree.topology();
  const std::size_t n = t.leaf_count;
  SymmetricMap map(tree.leaves(), universe);
  // m is on the x-y path iff x and y fall into different components of the
  // forest left after deleting every m-edge.
  std::vector<std::size_t> comp(t.vertex_count);
  auto find = [&](std::size_t v) {
    while (comp[v] != v) {
      comp[v] = comp[comp[v]];
      v = comp[v];
    }
    return v;
  };
  for (std::size_t m = 0; m < tree.colors().size(); ++m) {
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    bool any = false;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      const auto& label = tree.label(e);
      if (std::binary_search(label.begin(), label.end(), m)) {
        any = true;
        continue;
      }
      comp[find(t.edges[e].first)] = find(t.edges[e].second);
    }
    if (!any) continue;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (find(x) != find(y)) map.insert(x, y, to_universe[m]);
      }
    }
  }
  return map;
}

namespace {

// Mutable edge list used by the structural rewrites below.
struct WorkTree {
  struct Edge {
    std::size_t u;
    std::size_t v;
    ColorLabel label;
    bool alive = true;
  };
  std::size_t leaf_count = 0;
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<bool> vertex_alive;

  explicit WorkTree(const LabeledTree& tree)
      : leaf_count(tree.leaf_count()),
        vertex_count(tree.vertex_count()),
        vertex_alive(tree.vertex_count(), true) {
    const auto& t = tree.topology();
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      edges.push_back({t.edges[e].first, t.edges[e].second, tree.label(e), true});
    }
  }

  std::vector<std::vector<std::size_t>> incident() const {
    std::vector<std::vector<std::size_t>> inc(vertex_count);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!edges[e].alive) continue;
      inc[edges[e].u].push_back(e);
      inc[edges[e].v].push_back(e);
    }
    return inc;
  }

  // Compacts live vertices: leaves keep their relative order via `leaf_index`
  // (old leaf -> new leaf index), inner vertices follow in old order.
  LabeledTree finish(LeafSet leaves, ColorSet colors, const std::vector<std::size_t>& leaf_index,
                     TreeShape shape) const {
    std::vector<std::size_t> remap(vertex_count, vertex_count);
    Topology t;
    t.leaf_count = leaves.size();
    t.vertex_count = leaves.size();
    for (std::size_t v = 0; v < leaf_count; ++v) {
      if (vertex_alive[v]) remap[v] = leaf_index[v];
    }
    for (std::size_t v = leaf_count; v < vertex_count; ++v) {
      if (vertex_alive[v]) remap[v] = t.add_vertex();
    }
    std::vector<ColorLabel> labels;
    for (const auto& e : edges) {
      if (!e.alive) continue;
      t.add_edge(remap[e.u], remap[e.v]);
      labels.push_back(e.label);
    }
    return LabeledTree(std::move(leaves), std::move(colors), std::move(t), std::move(labels), shape);
  }
};

ColorLabel label_union(const ColorLabel& a, const ColorLabel& b) {
  ColorLabel out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

LabeledTree suppress_degree_two(const LabeledTree& tree) {
  WorkTree w(tree);
  bool changed = true;
  while (changed) {
    changed = false;
    const auto inc = w.incident();
    for (std::size_t v = w.leaf_count; v < w.vertex_count; ++v) {
      if (!w.vertex_alive[v] || inc[v].size() != 2) continue;
      auto& e1 = w.edges[inc[v][0]];
      auto& e2 = w.edges[inc[v][1]];
      std::size_t a = e1.u == v ? e1.v : e1.u;
      std::size_t b = e2.u == v ? e2.v : e2.u;
      e1.alive = false;
      e2.alive = false;
      w.vertex_alive[v] = false;
      w.edges.push_back({a, b, label_union(e1.label, e2.label), true});
      changed = true;
      break;
    }
  }
  return w.finish(tree.leaves(), tree.colors(), identity(w.leaf_count), TreeShape::kPhylogenetic);
}

LabeledTree prune_leaves(const LabeledTree& tree, const LeafSet& keep) {
  ValidationReport report;
  if (keep.size() < 2) report.add("too-few-leaves", "pruning must keep at least two leaves");
  std::vector<std::size_t> leaf_index(tree.leaf_count(), tree.leaf_count());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    auto x = tree.leaves().index_of(keep[i]);
    if (!x) {
      report.add("unknown-leaf", "leaf '" + keep[i] + "' is not in the tree");
    } else {
      leaf_index[*x] = i;
    }
  }
  if (!report.ok()) throw ValidationError(std::move(report));

  WorkTree w(tree);
  for (std::size_t x = 0; x < w.leaf_count; ++x) {
    if (leaf_index[x] != tree.leaf_count()) continue;
    w.vertex_alive[x] = false;
    for (auto& e : w.edges) {
      if (e.alive && (e.u == x || e.v == x)) e.alive = false;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const auto inc = w.incident();
    for (std::size_t v = w.leaf_count; v < w.vertex_count; ++v) {
      if (w.vertex_alive[v] && inc[v].size() <= 1) {
        w.vertex_alive[v] = false;
        for (std::size_t e : inc[v]) w.edges[e].alive = false;
        changed = true;
      }
    }
  }
  return w.finish(keep, tree.colors(), leaf_index, TreeShape::kAllowDegreeTwo);
}

LabeledTree restrict_labels(const LabeledTree& tree, const ColorSet& sub_colors) {
  std::vector<std::size_t> to_sub(tree.colors().size(), sub_colors.size());
  for (std::size_t i = 0; i < sub_colors.size(); ++i) {
    to_sub[tree.colors().require(sub_colors[i])] = i;
  }
  std::vector<ColorLabel> labels;
  for (const auto& label : tree.labels()) {
    ColorLabel l;
    for (std::size_t m : label) {
      if (to_sub[m] != sub_colors.size()) l.push_back(to_sub[m]);
    }
    labels.push_back(std::move(l));
  }
  return LabeledTree(tree.leaves(), sub_colors, tree.topology(), std::move(labels), tree.shape());
}

LabeledTree contract_edge(const LabeledTree& tree, std::size_t edge) {
  if (edge >= tree.edge_count() || !tree.topology().is_inner_edge(edge)) {
    throw PreconditionError("only inner edges can be contracted");
  }
  WorkTree w(tree);
  const std::size_t keep = w.edges[edge].u;
  const std::size_t gone = w.edges[edge].v;
  w.edges[edge].alive = false;
  w.vertex_alive[gone] = false;
  for (auto& e : w.edges) {
    if (!e.alive) continue;
    if (e.u == gone) e.u = keep;
    if (e.v == gone) e.v = keep;
  }
  return w.finish(tree.leaves(), tree.colors(), identity(w.leaf_count), tree.shape());
}

ValidationReport validate_tree(const TreeDocument& doc) {
  ValidationReport report;
  std::set<std::string> vertices;
  for (const auto& v : doc.vertices) {
    if (v.empty()) report.add("empty-vertex", "empty vertex name");
    if (!vertices.insert(v).second) report.add("duplicate-vertex", "duplicate vertex '" + v + "'");
  }
  std::set<std::string> leaves;
  for (const auto& x : doc.leaves) {
    if (!vertices.contains(x)) report.add("unknown-leaf", "leaf '" + x + "' is not a vertex");
    if (!leaves.insert(x).second) report.add("duplicate-leaf", "duplicate leaf '" + x + "'");
  }
  std::set<std::string> colors(doc.colors.begin(), doc.colors.end());
  if (colors.size() != doc.colors.size()) report.add("duplicate-color", "duplicate color identifier");
  for (const auto& e : doc.edges) {
    for (const auto* end : {&e.first, &e.second}) {
      if (!vertices.contains(*end)) report.add("unknown-vertex", "edge names unknown vertex '" + *end + "'");
    }
    if (!doc.colors.empty()) {
      for (const auto& c : e.colors) {
        if (!colors.contains(c)) report.add("unknown-color", "edge label cites unknown color '" + c + "'");
      }
    }
  }
  if (!report.ok()) return report;

  const LeafSet leaf_set(doc.leaves);
  std::map<std::string, std::size_t> index;
  Topology t;
  t.leaf_count = leaf_set.size();
  t.vertex_count = leaf_set.size();
  for (std::size_t i = 0; i < leaf_set.size(); ++i) index[leaf_set[i]] = i;
  for (const auto& v : doc.vertices) {
    if (!leaves.contains(v)) index[v] = t.add_vertex();
  }
  for (const auto& e : doc.edges) t.add_edge(index[e.first], index[e.second]);
  for (auto& issue : validate_topology(t, TreeShape::kPhylogenetic).issues) {
    report.issues.push_back(std::move(issue));
  }
  return report;
}

LabeledTree build_tree(const TreeDocument& doc) {
  auto report = validate_tree(doc);
  if (!report.ok()) throw ValidationError(std::move(report));
  const LeafSet leaves(doc.leaves);
  std::vector<std::string> color_ids = doc.colors;
  if (color_ids.empty()) {
    std::set<std::string> used;
    for (const auto& e : doc.edges) used.insert(e.colors.begin(), e.colors.end());
    color_ids.assign(used.begin(), used.end());
  }
  const ColorSet colors(color_ids);
  std::map<std::string, std::size_t> index;
  Topology t;
  t.leaf_count = leaves.size();
  t.vertex_count = leaves.size();
  for (std::size_t i = 0; i < leaves.size(); ++i) index[leaves[i]] = i;
  for (const auto& v : doc.vertices) {
    if (!leaves.contains(v)) index[v] = t.add_vertex();
  }
  std::vector<ColorLabel> labels;
  for (const auto& e : doc.edges) {
    t.add_edge(index[e.first], index[e.second]);
    ColorLabel l;
    for (const auto& c : e.colors) l.push_back(colors.require(c));
    labels.push_back(std::move(l));
  }
  return LabeledTree(leaves, colors, std::move(t), std::move(labels));
}

TreeDocument to_document(const LabeledTree& tree) {
  TreeDocument doc;
  const auto& t = tree.topology();
  std::vector<std::string> names(t.vertex_count);
  for (std::size_t x = 0; x < t.leaf_count; ++x) names[x] = tree.leaves()[x];
  std::size_t counter = 0;
  for (std::size_t v = t.leaf_count; v < t.vertex_count; ++v) {
    std::string name;
    do {
      name = "v" + std::to_string(++counter);
    } while (tree.leaves().contains(name));
    names[v] = name;
  }
  doc.vertices = names;
  doc.leaves = tree.leaves().ids();
  doc.colors = tree.colors().ids();
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    TreeEdgeEntry entry{names[t.edges[e].first], names[t.edges[e].second], {}};
    for (std::size_t m : tree.label(e)) entry.colors.push_back(tree.colors()[m]);
    doc.edges.push_back(std::move(entry));
  }
  return doc;
}

}  // namespace symfitch
