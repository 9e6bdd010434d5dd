#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symfitch {

// Leaf subsets are bitmasks over the canonical leaf order.
using LeafMask = std::uint64_t;
inline constexpr std::size_t kMaxLeaves = 64;

constexpr LeafMask leaf_bit(std::size_t i) { return LeafMask{1} << i; }
constexpr LeafMask all_leaves(std::size_t n) {
  return n >= kMaxLeaves ? ~LeafMask{0} : leaf_bit(n) - 1;
}
constexpr int leaf_count_of(LeafMask m) { return std::popcount(m); }
constexpr std::size_t lowest_leaf(LeafMask m) {
  return static_cast<std::size_t>(std::countr_zero(m));
}

template <class F>
void for_each_leaf(LeafMask m, F&& f) {
  while (m != 0) {
    f(lowest_leaf(m));
    m &= m - 1;
  }
}

// Ordering used for every identifier: digit runs compare numerically, so
// "x2" < "x10" and "9" < "10". Ties fall back to plain byte order.
bool natural_less(std::string_view lhs, std::string_view rhs);

// Sorted, duplicate-free set of non-empty string identifiers. The position of
// an identifier in the canonical order is its index everywhere in the library.
template <class Tag>
class IdSet {
 public:
  IdSet() = default;
  // Throws ValidationError on empty or duplicate identifiers.
  explicit IdSet(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = std::lower_bound(
        ids_.begin(), ids_.end(), id,
        [](const std::string& a, std::string_view b) { return natural_less(a, b); });
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
  }
  bool contains(std::string_view id) const { return index_of(id).has_value(); }

  // Index of `id`; throws ValidationError naming the kind when absent.
  std::size_t require(std::string_view id) const;

  friend bool operator==(const IdSet&, const IdSet&) = default;

 private:
  std::vector<std::string> ids_;
};

struct LeafTag {
  static constexpr const char* kind = "leaf";
};
struct ColorTag {
  static constexpr const char* kind = "color";
};

using LeafSet = IdSet<LeafTag>;
using ColorSet = IdSet<ColorTag>;

// Leaf names for generated instances: a..z up to 26 leaves, x1..xn beyond.
std::vector<std::string> default_leaf_names(std::size_t n);
// Color names "1".."k".
std::vector<std::string> numbered_names(std::size_t k);

// Builds the mask of `names` over `leaves`; throws on unknown names.
LeafMask mask_of(const LeafSet& leaves, const std::vector<std::string>& names);
std::vector<std::string> names_of(const LeafSet& leaves, LeafMask mask);

}  // namespace symfitch
