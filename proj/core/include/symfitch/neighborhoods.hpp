#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "symfitch/ids.hpp"
#include "symfitch/subsplit.hpp"
#include "symfitch/symmetric_map.hpp"

namespace symfitch {

// N_not_m[y]: y together with every x whose entry with y lacks color m.
LeafMask complementary_neighborhood(const SymmetricMap& map, std::size_t color, std::size_t y);
LeafMask complementary_neighborhood(const SymmetricMap& map, std::string_view color,
                                    std::string_view y);

// The set (not multiset) of complementary neighborhoods of one color, sorted
// by mask value.
struct NeighborhoodSystem {
  std::size_t color = 0;
  LeafMask ground = 0;
  std::vector<LeafMask> members;
};

NeighborhoodSystem neighborhood_system(const SymmetricMap& map, std::size_t color);
NeighborhoodSystem neighborhood_system(const SymmetricMap& map, std::string_view color);

struct PartitionViolation {
  enum class Kind { kOverlap, kUncovered };
  Kind kind = Kind::kOverlap;
  // For kOverlap: two distinct members sharing `leaf`. For kUncovered both
  // members are 0 and `leaf` lies in no member.
  LeafMask first = 0;
  LeafMask second = 0;
  std::size_t leaf = 0;
};

// nullopt iff the members are pairwise disjoint and cover the ground set.
std::optional<PartitionViolation> is_partition(const NeighborhoodSystem& sys);

// The membership formulation: for every member N and every leaf y,
// N == N_not_m[y] exactly when y is in N. Used to cross-check is_partition.
bool neighborhoods_self_consistent(const SymmetricMap& map, std::size_t color);

// Subsplits with the colors whose neighborhood systems produced them.
// Provenance does not take part in equality or deduplication.
class SubsplitSystem {
 public:
  explicit SubsplitSystem(std::size_t leaf_count = 0) : leaf_count_(leaf_count) {}

  void insert(const Subsplit& s, std::optional<std::size_t> color = std::nullopt);
  bool contains(const Subsplit& s) const { return entries_.contains(s); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t leaf_count() const { return leaf_count_; }

  // Canonical (sorted) order.
  std::vector<Subsplit> subsplits() const;
  const std::vector<std::size_t>& colors_of(const Subsplit& s) const { return entries_.at(s); }

  friend bool operator==(const SubsplitSystem& a, const SubsplitSystem& b) {
    return a.subsplits() == b.subsplits();
  }

 private:
  std::size_t leaf_count_;
  std::map<Subsplit, std::vector<std::size_t>> entries_;
};

// All N|N' with N, N' disjoint members of the color's neighborhood system.
SubsplitSystem subsplit_system(const SymmetricMap& map, std::size_t color);

struct SubsplitSystems {
  SubsplitSystem all;         // union over colors
  SubsplitSystem nontrivial;  // both sides of size >= 2
};

SubsplitSystems full_subsplit_systems(const SymmetricMap& map);

}  // namespace symfitch
