#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symfitch/subsplit.hpp"
#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch {

// Exhaustive reference procedures. They share no code with the neighborhood
// and subsplit machinery and are meant as test oracles at small sizes.

struct BruteForceCaps {
  std::size_t max_leaves = 7;
  std::size_t max_colors = 3;
};

// Every binary topology on n >= 2 leaves, (2n-5)!! of them for n >= 3, by
// leaf insertion in a fixed order.
std::vector<Topology> enumerate_binary_topologies(std::size_t n);

// Every phylogenetic topology on n >= 2 leaves up to isomorphism: binary
// topologies and all their inner-edge contractions, deduplicated.
std::vector<Topology> enumerate_phylogenetic_topologies(std::size_t n);

// Some edge labeling of `topology` over the used colors that explains
// `map`, or nullopt. Each color is handled on its own by trying every
// subset of edges.
std::optional<LabeledTree> explaining_labeling(const SymmetricMap& map, const Topology& topology);

// Some explaining tree on a binary topology, or nullopt if none exists.
// Restricting to binary topologies loses nothing: refining a vertex of an
// explaining tree and labeling the new edge {} explains the same map.
// Throws ResourceLimitError beyond `caps` (leaves, or colors in use).
std::optional<LabeledTree> brute_force_is_fitch(const SymmetricMap& map, const BruteForceCaps& caps = {});

// Fewest vertices of any explaining phylogenetic tree, or nullopt.
std::optional<std::size_t> minimum_explaining_vertex_count(const SymmetricMap& map,
                                                           const BruteForceCaps& caps = {});

// Some binary topology displaying every subsplit, or nullopt.
// Throws ResourceLimitError for more than max_leaves leaves (default 9).
std::optional<Topology> brute_force_compatible(const std::vector<Subsplit>& subsplits, std::size_t leaf_count,
                                               std::size_t max_leaves = 9);

}  // namespace symfitch
