#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symfitch/errors.hpp"
#include "symfitch/ids.hpp"
#include "symfitch/symmetric_map.hpp"

namespace symfitch {

// Unlabeled unrooted tree. Vertices [0, leaf_count) are the leaves in
// canonical leaf order; the remaining vertices are inner vertices.
struct Topology {
  std::size_t leaf_count = 0;
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t add_vertex() { return vertex_count++; }
  std::size_t add_edge(std::size_t u, std::size_t v) {
    edges.emplace_back(u, v);
    return edges.size() - 1;
  }

  // adjacency()[v] lists the indices of the edges incident to v.
  std::vector<std::vector<std::size_t>> adjacency() const;
  // For every edge {u, v}: the leaves in the component of v after deleting
  // the edge. The other side is the complement within all leaves.
  std::vector<LeafMask> edge_sides() const;
  LeafMask leaves_mask() const { return all_leaves(leaf_count); }
  bool is_leaf(std::size_t v) const { return v < leaf_count; }
  bool is_inner_edge(std::size_t e) const {
    return !is_leaf(edges[e].first) && !is_leaf(edges[e].second);
  }
};

enum class TreeShape {
  // Inner vertices have degree >= 3.
  kPhylogenetic,
  // Inner vertices of degree 2 are tolerated (intermediate results only).
  kAllowDegreeTwo,
};

// Connectivity, acyclicity, leaves exactly the degree-1 vertices, and the
// inner-degree bound for `shape`.
ValidationReport validate_topology(const Topology& t, TreeShape shape);

std::size_t diameter(const Topology& t);

// Sorted color indices.
using ColorLabel = std::vector<std::size_t>;

// Edge-labeled tree (T, lambda): a topology whose leaves are named by a
// LeafSet and whose edges carry subsets of a ColorSet (possibly empty).
class LabeledTree {
 public:
  LabeledTree() = default;
  // Throws ValidationError if the topology is invalid for `shape`, the leaf
  // count disagrees with `leaves`, or a label cites an unknown color.
  LabeledTree(LeafSet leaves, ColorSet colors, Topology topology, std::vector<ColorLabel> labels,
              TreeShape shape = TreeShape::kPhylogenetic);

  const LeafSet& leaves() const { return leaves_; }
  const ColorSet& colors() const { return colors_; }
  const Topology& topology() const { return topology_; }
  const std::vector<ColorLabel>& labels() const { return labels_; }
  const ColorLabel& label(std::size_t edge) const { return labels_[edge]; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t vertex_count() const { return topology_.vertex_count; }
  std::size_t edge_count() const { return topology_.edges.size(); }
  TreeShape shape() const { return shape_; }

 private:
  LeafSet leaves_;
  ColorSet colors_;
  Topology topology_;
  std::vector<ColorLabel> labels_;
  TreeShape shape_ = TreeShape::kPhylogenetic;
};

// The map explained by `tree`: m is in the entry of {x, y} iff some edge on
// the x-y path carries m. The color universe is the tree's color set.
// Throws ValidationError unless the tree is phylogenetic with >= 2 leaves.
SymmetricMap explain(const LabeledTree& tree);
// Same, over a caller-supplied superset of the tree's colors.
SymmetricMap explain(const LabeledTree& tree, const ColorSet& universe);

// Removes every degree-2 vertex, merging its two edges into one labeled with
// the union of their labels. Leaf-to-leaf path colors are preserved.
LabeledTree suppress_degree_two(const LabeledTree& tree);

// Deletes the leaves outside `keep`, then repeatedly deletes inner vertices
// left with degree 1. Degree-2 vertices remain; see suppress_degree_two.
LabeledTree prune_leaves(const LabeledTree& tree, const LeafSet& keep);

// Intersects every edge label with `sub_colors` (a subset of the tree colors).
LabeledTree restrict_labels(const LabeledTree& tree, const ColorSet& sub_colors);

// Contracts inner edge `edge`, keeping all other labels.
LabeledTree contract_edge(const LabeledTree& tree, std::size_t edge);

// Serialized, unvalidated tree. Leaf vertices are named by their leaf id.
struct TreeEdgeEntry {
  std::string first;
  std::string second;
  std::vector<std::string> colors;
};

struct TreeDocument {
  std::vector<std::string> vertices;
  std::vector<TreeEdgeEntry> edges;
  std::vector<std::string> leaves;
  // Optional color universe; the union of the edge labels when empty.
  std::vector<std::string> colors;
};

ValidationReport validate_tree(const TreeDocument& doc);
LabeledTree build_tree(const TreeDocument& doc);
// Inner vertices are named "v1", "v2", ... skipping names taken by leaves.
TreeDocument to_document(const LabeledTree& tree);

}  // namespace symfitch
