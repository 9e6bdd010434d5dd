#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symfitch/subsplit.hpp"
#include "symfitch/symmetric_map.hpp"

namespace symfitch {

// Quartets q1..qk over a ground set, in input order. The order fixes the
// colors of the reduction: quartet i becomes color "i" (1-based).
struct QuartetSet {
  LeafSet ground;
  std::vector<Subsplit> quartets;
  // How many repeated quartets were dropped when building the set.
  std::size_t duplicates_removed = 0;
};

// Throws ValidationError if some entry is not a quartet or leaves the
// ground set. Keeps the first occurrence of each repeated quartet.
QuartetSet make_quartet_set(LeafSet ground, const std::vector<Subsplit>& quartets);

// Text format: one "a b | c d" per line; '#' starts a comment; blank lines
// are ignored. The ground set is every leaf mentioned plus `extra_leaves`.
QuartetSet parse_quartets(std::string_view text, const std::vector<std::string>& extra_leaves = {});
std::string format_quartets(const QuartetSet& q);

// Color i lies on {x, y} iff q_i = ab|cd and {x, y} is neither {a, b} nor
// {c, d}. Colors are "1".."k". Throws ValidationError if the ground set has
// fewer than two leaves.
SymmetricMap reduce_quartets_to_map(const QuartetSet& q);

// `k` distinct quartets drawn uniformly from all 3 * C(n, 4) quartets on
// default_leaf_names(n), by a partial Fisher-Yates shuffle of their
// canonical enumeration. Throws ValidationError if k is too large.
QuartetSet random_quartet_set(std::size_t n, std::size_t k, std::uint64_t seed);

// All quartets on `n` leaves: for a < b < c < d, ab|cd, ac|bd, ad|bc.
std::vector<Subsplit> all_quartets(std::size_t n);

}  // namespace symfitch
