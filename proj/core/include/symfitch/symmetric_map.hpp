#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symfitch/errors.hpp"
#include "symfitch/ids.hpp"

namespace symfitch {

// A map from unordered pairs of distinct leaves to sets of colors.
//
// Storage is one adjacency row per (color, leaf): bit y of row(m, x) is set iff
// m is in the entry of {x, y}. Rows are written symmetrically, so the entry of
// {x, y} equals the entry of {y, x} by construction, and every pair always has
// an entry (possibly empty). Operations take maps by const reference and never
// mutate them; `insert` exists only for building.
class SymmetricMap {
 public:
  SymmetricMap() = default;
  // All entries empty. Throws ValidationError if there are more than
  // kMaxLeaves leaves.
  SymmetricMap(LeafSet leaves, ColorSet colors);

  const LeafSet& leaves() const { return leaves_; }
  const ColorSet& colors() const { return colors_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t color_count() const { return colors_.size(); }

  void insert(std::size_t x, std::size_t y, std::size_t color);
  void insert(std::string_view x, std::string_view y, std::string_view color);

  bool has(std::size_t x, std::size_t y, std::size_t color) const {
    return (rows_[color][x] >> y) & 1U;
  }
  // Leaves y != x with `color` in the entry of {x, y}.
  LeafMask row(std::size_t color, std::size_t x) const { return rows_[color][x]; }
  // Sorted color indices of the entry {x, y}.
  std::vector<std::size_t> entry(std::size_t x, std::size_t y) const;
  std::size_t entry_size(std::size_t x, std::size_t y) const;
  bool color_used(std::size_t color) const;
  std::vector<std::size_t> used_colors() const;

  friend bool operator==(const SymmetricMap&, const SymmetricMap&) = default;

 private:
  LeafSet leaves_;
  ColorSet colors_;
  std::vector<std::vector<LeafMask>> rows_;
};

// Serialized, unvalidated form of a map as read from a file.
struct PairEntry {
  std::string first;
  std::string second;
  std::vector<std::string> colors;
};

struct MapDocument {
  std::vector<std::string> leaves;
  std::vector<std::string> colors;
  std::vector<PairEntry> pairs;
  // Require every pair of distinct leaves to be listed explicitly.
  bool strict = false;
};

// Every invariant violation of `doc`: duplicate or empty identifiers, fewer
// than two leaves, unknown leaves or colors, self pairs, pairs listed twice
// with different colors, and (strict only) missing pairs.
ValidationReport validate_map(const MapDocument& doc);

// Validates and builds. Unlisted pairs are empty unless `doc.strict`.
SymmetricMap build_map(const MapDocument& doc);

// Lists every pair in canonical order (strict form).
MapDocument to_document(const SymmetricMap& map);

// Entries of the pairs within `sub_leaves`, intersected with `sub_colors`.
// Throws ValidationError unless sub_leaves and sub_colors are subsets and
// |sub_leaves| >= 2.
SymmetricMap restrict(const SymmetricMap& map, const LeafSet& sub_leaves,
                      const ColorSet& sub_colors);

}  // namespace symfitch
