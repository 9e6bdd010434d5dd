#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "symfitch/ids.hpp"

namespace symfitch {

// Unordered pair A|B of disjoint, non-empty leaf subsets. Stored in canonical
// form: the side holding the smallest leaf index comes first, so A|B and B|A
// are the same value.
class Subsplit {
 public:
  // Throws ValidationError if a side is empty or the sides overlap.
  Subsplit(LeafMask a, LeafMask b);

  LeafMask first() const { return first_; }
  LeafMask second() const { return second_; }
  LeafMask support() const { return first_ | second_; }

  bool is_trivial() const { return leaf_count_of(first_) == 1 || leaf_count_of(second_) == 1; }
  bool is_quartet() const { return leaf_count_of(first_) == 2 && leaf_count_of(second_) == 2; }
  bool is_split_of(LeafMask ground) const { return support() == ground; }

  // The four-intersection test: true iff A1|B1 and A2|B2 leave every
  // cross-intersection non-empty, which rules out any common tree.
  bool conflicts_with(const Subsplit& other) const;

  friend auto operator<=>(const Subsplit&, const Subsplit&) = default;
  friend bool operator==(const Subsplit&, const Subsplit&) = default;

 private:
  LeafMask first_;
  LeafMask second_;
};

// "a b | c d" using leaf names.
std::string format_subsplit(const Subsplit& s, const LeafSet& leaves);

}  // namespace symfitch

template <>
struct std::hash<symfitch::Subsplit> {
  std::size_t operator()(const symfitch::Subsplit& s) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(s.first());
    return h ^ (std::hash<std::uint64_t>{}(s.second()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};
