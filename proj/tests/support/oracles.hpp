#pragma once

// Deliberately naive re-implementations used to cross-check the library.
// They work on names and std::set and share no code with the bitmask paths.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch::testing {

using NamedMap = std::map<std::pair<std::string, std::string>, std::set<std::string>>;

// Walks the unique path between every two leaves and unions the labels.
inline NamedMap path_walk_explain(const LabeledTree& tree) {
  const Topology& t = tree.topology();
  NamedMap out;
  for (std::size_t x = 0; x < t.leaf_count; ++x) {
    for (std::size_t y = x + 1; y < t.leaf_count; ++y) {
      // Depth-first search from x remembering the edge used to reach each vertex.
      std::vector<long> via(t.vertex_count, -1);
      std::vector<bool> seen(t.vertex_count, false);
      std::vector<std::size_t> stack{x};
      seen[x] = true;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < t.edges.size(); ++e) {
          std::size_t w;
          if (t.edges[e].first == v) {
            w = t.edges[e].second;
          } else if (t.edges[e].second == v) {
            w = t.edges[e].first;
          } else {
            continue;
          }
          if (seen[w]) continue;
          seen[w] = true;
          via[w] = static_cast<long>(e);
          stack.push_back(w);
        }
      }
      std::set<std::string> colors;
      for (std::size_t v = y; v != x;) {
        const auto e = static_cast<std::size_t>(via[v]);
        for (std::size_t c : tree.label(e)) colors.insert(tree.colors()[c]);
        v = t.edges[e].first == v ? t.edges[e].second : t.edges[e].first;
      }
      out[{tree.leaves()[x], tree.leaves()[y]}] = colors;
    }
  }
  return out;
}

inline NamedMap named(const SymmetricMap& map) {
  NamedMap out;
  for (std::size_t x = 0; x < map.leaf_count(); ++x) {
    for (std::size_t y = x + 1; y < map.leaf_count(); ++y) {
      std::set<std::string> colors;
      for (std::size_t c : map.entry(x, y)) colors.insert(map.colors()[c]);
      out[{map.leaves()[x], map.leaves()[y]}] = colors;
    }
  }
  return out;
}

// Removes each edge in turn and floods from one endpoint.
inline bool naive_displays(const Topology& t, const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  for (std::size_t cut = 0; cut < t.edges.size(); ++cut) {
    std::set<std::size_t> comp{t.edges[cut].first};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        if (e == cut) continue;
        const auto [u, v] = t.edges[e];
        if (comp.count(u) != comp.count(v)) {
          comp.insert(u);
          comp.insert(v);
          grew = true;
        }
      }
    }
    auto inside = [&](const std::set<std::size_t>& s) {
      for (auto x : s) {
        if (!comp.count(x)) return false;
      }
      return true;
    };
    auto outside = [&](const std::set<std::size_t>& s) {
      for (auto x : s) {
        if (comp.count(x)) return false;
      }
      return true;
    };
    if ((inside(a) && outside(b)) || (inside(b) && outside(a))) return true;
  }
  return false;
}

inline std::set<std::size_t> to_set(LeafMask m) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < 64; ++i) {
    if ((m >> i) & 1U) s.insert(i);
  }
  return s;
}

// {N_not_m[y] : y} as sets of indices.
inline std::set<std::set<std::size_t>> naive_neighborhoods(const SymmetricMap& map, std::size_t color) {
  std::set<std::set<std::size_t>> out;
  for (std::size_t y = 0; y < map.leaf_count(); ++y) {
    std::set<std::size_t> n{y};
    for (std::size_t x = 0; x < map.leaf_count(); ++x) {
      if (x == y) continue;
      const auto entry = map.entry(x, y);
      bool has = false;
      for (auto c : entry) has = has || c == color;
      if (!has) n.insert(x);
    }
    out.insert(n);
  }
  return out;
}

inline bool naive_is_partition(const std::set<std::set<std::size_t>>& family, std::size_t n) {
  std::vector<int> hits(n, 0);
  for (const auto& s : family) {
    for (auto x : s) ++hits[x];
  }
  for (int h : hits) {
    if (h != 1) return false;
  }
  return true;
}

}  // namespace symfitch::testing
