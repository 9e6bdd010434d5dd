#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "symfitch/compat.hpp"
#include "symfitch/neighborhoods.hpp"
#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch {

// Labels `topology` (leaves in the map's canonical order) with
// m in lambda(e) iff e separates two blocks N, N' of the color-m partition
// and no block has leaves on both sides of e. Colors whose neighborhood
// system is not a partition are never used.
LabeledTree label_by_neighborhoods(const SymmetricMap& map, const Topology& topology);

// The explaining tree built from a binary tree displaying the non-trivial
// subsplit system, or nullopt if that system is incompatible.
// Throws PreconditionError if some neighborhood system is not a partition,
// ResourceLimitError if the search hits the leaf cap or the time budget.
std::optional<LabeledTree> build_explaining_tree(const SymmetricMap& map, const SearchOptions& options = {});

struct RecognitionResult {
  enum class Decision { kFitch, kNotFitch, kUndecided };
  Decision decision = Decision::kUndecided;
  // Present iff decision == kFitch; explain(*witness) equals the input map.
  std::optional<LabeledTree> witness;

  // Rejection reason (i): the first color whose neighborhoods overlap or
  // fail to cover the leaves.
  struct NonPartition {
    std::size_t color = 0;
    PartitionViolation violation;
  };
  std::optional<NonPartition> non_partition;
  // Rejection reason (ii): incompatible non-trivial subsplits, either as a
  // conflicting pair or by exhausting the search.
  std::optional<std::pair<Subsplit, Subsplit>> conflicting_pair;
  bool search_exhausted = false;

  std::size_t nontrivial_subsplits = 0;
  std::uint64_t nodes_explored = 0;
  std::string note;
};

// Throws ValidationError if the map has fewer than two leaves.
RecognitionResult recognize(const SymmetricMap& map, const SearchOptions& options = {});

}  // namespace symfitch
