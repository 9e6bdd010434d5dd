#include "symfitch/neighborhoods.hpp"

#include <algorithm>

namespace symfitch {

LeafMask complementary_neighborhood(const SymmetricMap& map, std::size_t color, std::size_t y) {
  return (all_leaves(map.leaf_count()) & ~map.row(color, y)) | leaf_bit(y);
}

LeafMask complementary_neighborhood(const SymmetricMap& map, std::string_view color,
                                    std::string_view y) {
  return complementary_neighborhood(map, map.colors().require(color), map.leaves().require(y));
}

NeighborhoodSystem neighborhood_system(const SymmetricMap& map, std::size_t color) {
  NeighborhoodSystem sys;
  sys.color = color;
  sys.ground = all_leaves(map.leaf_count());
  for (std::size_t y = 0; y < map.leaf_count(); ++y) {
    sys.members.push_back(complementary_neighborhood(map, color, y));
  }
  std::sort(sys.members.begin(), sys.members.end());
  sys.members.erase(std::unique(sys.members.begin(), sys.members.end()), sys.members.end());
  return sys;
}

NeighborhoodSystem neighborhood_system(const SymmetricMap& map, std::string_view color) {
  return neighborhood_system(map, map.colors().require(color));
}

std::optional<PartitionViolation> is_partition(const NeighborhoodSystem& sys) {
  // Members are distinct, so any shared leaf is a genuine overlap. Report the
  // overlap with the smallest shared leaf, then the lexicographic pair.
  std::optional<PartitionViolation> best;
  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.members.size(); ++j) {
      LeafMask shared = sys.members[i] & sys.members[j];
      if (shared == 0) continue;
      std::size_t leaf = lowest_leaf(shared);
      if (!best || leaf < best->leaf) {
        best = PartitionViolation{PartitionViolation::Kind::kOverlap, sys.members[i], sys.members[j], leaf};
      }
    }
  }
  if (best) return best;
  LeafMask covered = 0;
  for (LeafMask m : sys.members) covered |= m;
  if ((covered & sys.ground) != sys.ground) {
    return PartitionViolation{PartitionViolation::Kind::kUncovered, 0, 0,
                              lowest_leaf(sys.ground & ~covered)};
  }
  return std::nullopt;
}

bool neighborhoods_self_consistent(const SymmetricMap& map, std::size_t color) {
  const auto sys = neighborhood_system(map, color);
  for (LeafMask n : sys.members) {
    for (std::size_t y = 0; y < map.leaf_count(); ++y) {
      bool generated = complementary_neighborhood(map, color, y) == n;
      bool member = (n & leaf_bit(y)) != 0;
      if (generated != member) return false;
    }
  }
  return true;
}

void SubsplitSystem::insert(const Subsplit& s, std::optional<std::size_t> color) {
  auto& colors = entries_[s];
  if (color && std::find(colors.begin(), colors.end(), *color) == colors.end()) {
    colors.insert(std::upper_bound(colors.begin(), colors.end(), *color), *color);
  }
}

std::vector<Subsplit> SubsplitSystem::subsplits() const {
  std::vector<Subsplit> out;
  out.reserve(entries_.size());
  for (const auto& [s, c] : entries_) out.push_back(s);
  return out;
}

SubsplitSystem subsplit_system(const SymmetricMap& map, std::size_t color) {
  SubsplitSystem out(map.leaf_count());
  const auto sys = neighborhood_system(map, color);
  for (std::size_t i = 0; i < sys.members.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.members.size(); ++j) {
      if ((sys.members[i] & sys.members[j]) == 0) {
        out.insert(Subsplit(sys.members[i], sys.members[j]), color);
      }
    }
  }
  return out;
}

SubsplitSystems full_subsplit_systems(const SymmetricMap& map) {
  SubsplitSystems out{SubsplitSystem(map.leaf_count()), SubsplitSystem(map.leaf_count())};
  for (std::size_t m = 0; m < map.color_count(); ++m) {
    const auto per_color = subsplit_system(map, m);
    for (const auto& s : per_color.subsplits()) {
      out.all.insert(s, m);
      if (!s.is_trivial()) out.nontrivial.insert(s, m);
    }
  }
  return out;
}

}  // namespace symfitch
