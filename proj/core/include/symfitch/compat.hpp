#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symfitch/neighborhoods.hpp"
#include "symfitch/subsplit.hpp"
#include "symfitch/tree.hpp"

namespace symfitch {

// True iff deleting some edge leaves one side of `s` entirely in one
// component and the other side entirely in the other. Throws
// ValidationError if `s` names leaves the tree does not have.
bool displays(const Topology& tree, const Subsplit& s);
// Same test against precomputed edge_sides() of a tree with leaf set `all`.
bool displays(const std::vector<LeafMask>& edge_sides, LeafMask all, const Subsplit& s);

// First pair (in the given order) whose four cross-intersections are all
// non-empty. Such a pair proves incompatibility; nullopt proves nothing.
std::optional<std::pair<Subsplit, Subsplit>> pairwise_quick_reject(const std::vector<Subsplit>& subsplits);
std::optional<std::pair<Subsplit, Subsplit>> pairwise_quick_reject(const SubsplitSystem& system);

struct SearchOptions {
  // Largest number of leaves the exact search may branch over.
  std::size_t max_leaves = 16;
  // Zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  // Worker threads. The answer and witness do not depend on this value.
  unsigned jobs = 1;
};

struct CompatibilityVerdict {
  enum class Outcome { kCompatible, kIncompatible, kUndecided };
  Outcome outcome = Outcome::kUndecided;
  // Binary tree on all leaves displaying every input subsplit.
  std::optional<Topology> witness;
  // Set when a pairwise conflict was found.
  std::optional<std::pair<Subsplit, Subsplit>> conflicting_pair;
  // Set when incompatibility follows from exhausting the search space.
  bool search_exhausted = false;
  std::uint64_t nodes_explored = 0;
  std::string note;

  bool compatible() const { return outcome == Outcome::kCompatible; }
};

// Decides whether one tree on `leaf_count` leaves displays every subsplit.
//
// Leaves that occur in non-trivial subsplits are inserted one at a time, in
// canonical order, on every edge of the current binary tree; a branch is cut
// as soon as some subsplit restricted to the inserted leaves is not
// displayed. The remaining leaves are attached afterwards at a fixed edge.
// The witness is the first success in this order. Runs out of time budget as
// kUndecided; throws ResourceLimitError if more than max_leaves leaves need
// branching.
CompatibilityVerdict exact_compatibility(const std::vector<Subsplit>& subsplits, std::size_t leaf_count,
                                         const SearchOptions& options = {});
CompatibilityVerdict exact_compatibility(const SubsplitSystem& system, const SearchOptions& options = {});

// Subsplits covering the whole ground set.
class SplitSystem {
 public:
  // Throws ValidationError if a subsplit does not cover all `leaf_count` leaves.
  SplitSystem(std::size_t leaf_count, std::vector<Subsplit> splits);

  std::size_t leaf_count() const { return leaf_count_; }
  const std::vector<Subsplit>& splits() const { return splits_; }
  bool has_all_trivial() const;

 private:
  std::size_t leaf_count_;
  std::vector<Subsplit> splits_;
};

// Every split displayed by `tree` (one per edge, trivial splits included).
SplitSystem splits_of(const Topology& tree);

// The unique tree whose split set is `system`, or nullopt if two splits are
// incompatible. Splits are inserted by increasing smaller-side size, each
// refining one vertex of the initial star. Throws PreconditionError if a
// trivial split is missing.
std::optional<Topology> tree_from_splits(const SplitSystem& system);

// Newick-like string rooted at leaf 0 with children sorted, equal for two
// topologies iff they are isomorphic as leaf-labeled trees.
std::string canonical_form(const Topology& tree);

}  // namespace symfitch
