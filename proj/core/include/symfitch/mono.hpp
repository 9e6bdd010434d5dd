#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symfitch/ids.hpp"
#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch {

// Simple undirected graph on the leaves: {x, y} is an edge iff the focus
// color is in the entry of {x, y}.
struct ColorGraph {
  std::size_t vertex_count = 0;
  std::size_t color = 0;
  std::vector<LeafMask> adjacency;

  bool adjacent(std::size_t x, std::size_t y) const { return (adjacency[x] >> y) & 1U; }
  std::size_t edge_count() const;
};

ColorGraph graph_representation(const SymmetricMap& map, std::size_t color);
ColorGraph graph_representation(const SymmetricMap& map, std::string_view color);

// Single-color map on `leaves` whose color graph is `g`.
SymmetricMap map_from_graph(const ColorGraph& g, const LeafSet& leaves, const std::string& color);

// Three vertices inducing exactly one edge {edge_u, edge_v}; `isolated` is
// adjacent to neither.
struct K1K2Witness {
  std::size_t isolated = 0;
  std::size_t edge_u = 0;
  std::size_t edge_v = 0;
  friend bool operator==(const K1K2Witness&, const K1K2Witness&) = default;
};

// First induced K1+K2 in lexicographic order of vertex triples, if any.
std::optional<K1K2Witness> has_k1_plus_k2(const ColorGraph& g);

struct IndependentSetFamily {
  std::vector<LeafMask> parts;           // sorted by smallest vertex
  std::vector<LeafMask> parts_ge_two;    // the parts with at least two vertices
};

// Parts of a complete multi-partite graph, or nullopt when `g` is not one.
// Each part is checked to be independent and completely joined to every
// other part.
std::optional<IndependentSetFamily> multipartite_parts(const ColorGraph& g);

// Outcome for maps with at most one color per entry.
struct RestrictedDecision {
  bool accepted = false;
  // The color in use, if any.
  std::optional<std::size_t> color;
  // Rejection because two colors are in use: colors and one pair carrying each.
  struct TwoColors {
    std::size_t color_a;
    std::size_t color_b;
    std::pair<std::size_t, std::size_t> pair_a;
    std::pair<std::size_t, std::size_t> pair_b;
  };
  std::optional<TwoColors> two_colors;
  // Rejection because the single color's graph has an induced K1+K2.
  std::optional<K1K2Witness> k1_plus_k2;
};

// Polynomial recognition of maps with |entry| <= 1. Throws PreconditionError
// naming the first pair that carries two or more colors.
RestrictedDecision is_restricted_fitch(const SymmetricMap& map);

// Description of the family of least-resolved trees of a monochromatic
// Fitch map plus one canonical representative.
struct TreeFamilyDescription {
  // The color in use; nullopt when every entry is empty.
  std::optional<std::size_t> color;
  IndependentSetFamily independent_sets;
  // True when no part has two or more leaves (the color graph is complete):
  // every least-resolved tree is the star with at most one empty-label edge.
  bool star_case = false;
  // Inner vertex count shared by every least-resolved tree.
  std::size_t inner_vertex_count = 0;
  std::size_t vertex_count = 0;
  // Human-readable membership conditions, instantiated on this map.
  std::vector<std::string> constraints;
  LabeledTree representative;
};

// Throws PreconditionError if |X| < 3 or the map is not monochromatic, and
// RejectionError if its color graph is not complete multi-partite.
TreeFamilyDescription least_resolved_trees(const SymmetricMap& map);

// Violated membership conditions of `tree` for the least-resolved family of
// `map` ("1", "2a".."2e"); empty iff the tree belongs to the family.
std::vector<std::string> least_resolved_violations(const LabeledTree& tree, const SymmetricMap& map);

// A monochromatic map that is not a Fitch map.
class RejectionError : public Error {
 public:
  RejectionError(std::string message, K1K2Witness witness)
      : Error(std::move(message)), witness_(witness) {}
  const K1K2Witness& witness() const { return witness_; }

 private:
  K1K2Witness witness_;
};

}  // namespace symfitch
