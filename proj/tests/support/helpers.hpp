#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch::testing {

using Entry = std::tuple<std::string, std::string, std::vector<std::string>>;

inline SymmetricMap make_map(std::vector<std::string> leaves, std::vector<std::string> colors,
                             const std::vector<Entry>& entries) {
  MapDocument doc;
  doc.leaves = std::move(leaves);
  doc.colors = std::move(colors);
  for (const auto& [x, y, c] : entries) doc.pairs.push_back({x, y, c});
  return build_map(doc);
}

// The two-color map on {a,b,c,d} whose neighborhood systems are
// {{a,c},{b,d}} for color 1 and {{a,b},{c,d}} for color 2.
inline SymmetricMap hourglass() {
  return make_map({"a", "b", "c", "d"}, {"1", "2"},
                  {{"a", "b", {"1"}},
                   {"c", "d", {"1"}},
                   {"a", "c", {"2"}},
                   {"b", "d", {"2"}},
                   {"a", "d", {"1", "2"}},
                   {"b", "c", {"1", "2"}}});
}

inline LabeledTree make_tree(std::vector<std::string> leaves, std::vector<std::string> inner,
                             const std::vector<Entry>& edges, std::vector<std::string> colors = {}) {
  TreeDocument doc;
  doc.leaves = leaves;
  doc.vertices = leaves;
  doc.vertices.insert(doc.vertices.end(), inner.begin(), inner.end());
  for (const auto& [u, v, c] : edges) doc.edges.push_back({u, v, c});
  doc.colors = std::move(colors);
  return build_tree(doc);
}

inline LeafMask mask(const SymmetricMap& map, const std::vector<std::string>& names) {
  return mask_of(map.leaves(), names);
}

}  // namespace symfitch::testing
