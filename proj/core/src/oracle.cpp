#include "symfitch/oracle.hpp"

#include <algorithm>
#include <map>

#include "symfitch/compat.hpp"

namespace symfitch {

namespace {

void insert_all(Topology& t, std::size_t leaf, std::size_t n, std::vector<Topology>& out) {
  if (leaf == n) {
    out.push_back(t);
    return;
  }
  const std::size_t edges = t.edges.size();
  for (std::size_t e = 0; e < edges; ++e) {
    Topology next = t;
    const auto [u, v] = next.edges[e];
    const std::size_t w = next.add_vertex();
    next.edges[e] = {u, w};
    next.add_edge(w, v);
    next.add_edge(leaf, w);
    insert_all(next, leaf + 1, n, out);
  }
}

// Leaves and inner vertices keep their roles; inner vertices are renumbered
// densely after contraction.
Topology contract(const Topology& t, std::uint64_t chosen) {
  std::vector<std::size_t> rep(t.vertex_count);
  for (std::size_t v = 0; v < t.vertex_count; ++v) rep[v] = v;
  auto find = [&](std::size_t v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if ((chosen >> e) & 1U) {
      const std::size_t a = find(t.edges[e].first);
      const std::size_t b = find(t.edges[e].second);
      rep[std::max(a, b)] = std::min(a, b);
    }
  }
  Topology out;
  out.leaf_count = t.leaf_count;
  out.vertex_count = t.leaf_count;
  std::map<std::size_t, std::size_t> renamed;
  auto name = [&](std::size_t v) {
    v = find(v);
    if (v < t.leaf_count) return v;
    auto [it, fresh] = renamed.emplace(v, 0);
    if (fresh) it->second = out.add_vertex();
    return it->second;
  };
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if ((chosen >> e) & 1U) continue;
    const std::size_t a = name(t.edges[e].first);
    const std::size_t b = name(t.edges[e].second);
    out.add_edge(a, b);
  }
  return out;
}

// path[p] = edges on the path of the p-th pair (x < y, row-major).
std::vector<std::uint64_t> pair_paths(const Topology& t) {
  const auto adj = t.adjacency();
  const std::size_t n = t.leaf_count;
  std::vector<std::uint64_t> paths;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint64_t> reach(t.vertex_count, 0);
    std::vector<bool> seen(t.vertex_count, false);
    std::vector<std::size_t> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : adj[v]) {
        const std::size_t w = t.edges[e].first == v ? t.edges[e].second : t.edges[e].first;
        if (seen[w]) continue;
        seen[w] = true;
        reach[w] = reach[v] | (std::uint64_t{1} << e);
        stack.push_back(w);
      }
    }
    for (std::size_t y = x + 1; y < n; ++y) paths.push_back(reach[y]);
  }
  return paths;
}

void check_caps(const SymmetricMap& map, const BruteForceCaps& caps) {
  if (map.leaf_count() > caps.max_leaves) {
    throw ResourceLimitError("brute force is capped at " + std::to_string(caps.max_leaves) + " leaves");
  }
  if (map.used_colors().size() > caps.max_colors) {
    throw ResourceLimitError("brute force is capped at " + std::to_string(caps.max_colors) + " colors in use");
  }
}

}  // namespace

std::vector<Topology> enumerate_binary_topologies(std::size_t n) {
  Topology t;
  t.leaf_count = n;
  t.vertex_count = n;
  std::vector<Topology> out;
  if (n < 2) return out;
  if (n == 2) {
    t.add_edge(0, 1);
    return {t};
  }
  const std::size_t center = t.add_vertex();
  for (std::size_t x = 0; x < 3; ++x) t.add_edge(x, center);
  insert_all(t, 3, n, out);
  return out;
}

std::vector<Topology> enumerate_phylogenetic_topologies(std::size_t n) {
  std::map<std::string, Topology> unique;
  for (const auto& t : enumerate_binary_topologies(n)) {
    std::vector<std::size_t> inner;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      if (t.is_inner_edge(e)) inner.push_back(e);
    }
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << inner.size()); ++subset) {
      std::uint64_t chosen = 0;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if ((subset >> i) & 1U) chosen |= std::uint64_t{1} << inner[i];
      }
      Topology c = contract(t, chosen);
      unique.emplace(canonical_form(c), std::move(c));
    }
  }
  std::vector<Topology> out;
  for (auto& [key, t] : unique) out.push_back(std::move(t));
  return out;
}

std::optional<LabeledTree> explaining_labeling(const SymmetricMap& map, const Topology& topology) {
  const std::size_t n = map.leaf_count();
  const std::size_t edges = topology.edges.size();
  const auto paths = pair_paths(topology);
  std::vector<ColorLabel> labels(edges);
  for (std::size_t m = 0; m < map.color_count(); ++m) {
    if (!map.color_used(m)) continue;
    std::vector<bool> wanted;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) wanted.push_back(map.has(x, y, m));
    }
    std::optional<std::uint64_t> found;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges) && !found; ++subset) {
      bool ok = true;
      for (std::size_t p = 0; p < paths.size() && ok; ++p) ok = ((paths[p] & subset) != 0) == wanted[p];
      if (ok) found = subset;
    }
    if (!found) return std::nullopt;
    for (std::size_t e = 0; e < edges; ++e) {
      if ((*found >> e) & 1U) labels[e].push_back(m);
    }
  }
  return LabeledTree(map.leaves(), map.colors(), topology, std::move(labels));
}

std::optional<LabeledTree> brute_force_is_fitch(const SymmetricMap& map, const BruteForceCaps& caps) {
  check_caps(map, caps);
  for (const auto& t : enumerate_binary_topologies(map.leaf_count())) {
    if (auto tree = explaining_labeling(map, t)) return tree;
  }
  return std::nullopt;
}

std::optional<std::size_t> minimum_explaining_vertex_count(const SymmetricMap& map, const BruteForceCaps& caps) {
  check_caps(map, caps);
  std::optional<std::size_t> best;
  for (const auto& t : enumerate_phylogenetic_topologies(map.leaf_count())) {
    if (best && t.vertex_count >= *best) continue;
    if (explaining_labeling(map, t)) best = t.vertex_count;
  }
  return best;
}

std::optional<Topology> brute_force_compatible(const std::vector<Subsplit>& subsplits, std::size_t leaf_count,
                                               std::size_t max_leaves) {
  if (leaf_count > max_leaves) {
    throw ResourceLimitError("brute-force compatibility is capped at " + std::to_string(max_leaves) + " leaves");
  }
  for (const auto& t : enumerate_binary_topologies(leaf_count)) {
    const auto sides = t.edge_sides();
    bool ok = true;
    for (const auto& s : subsplits) ok = ok && displays(sides, t.leaves_mask(), s);
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace symfitch
