#include "symfitch/random.hpp"

namespace symfitch {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

LabeledTree random_labeled_tree(std::size_t n, const ColorSet& colors, double density, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random trees need at least two leaves");
  if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must lie in [0, 1]");
  if (n > kMaxLeaves) throw ValidationError("too-many-leaves", "at most 64 leaves are supported");
  Rng rng(seed);
  Topology t;
  t.leaf_count = n;
  t.vertex_count = n;
  if (n == 2) {
    t.add_edge(0, 1);
  } else {
    const std::size_t center = t.add_vertex();
    for (std::size_t x = 0; x < 3; ++x) t.add_edge(x, center);
    for (std::size_t x = 3; x < n; ++x) {
      const std::size_t e = rng.below(t.edges.size());
      const auto [u, v] = t.edges[e];
      const std::size_t w = t.add_vertex();
      t.edges[e] = {u, w};
      t.add_edge(w, v);
      t.add_edge(x, w);
    }
  }
  std::vector<ColorLabel> labels(t.edges.size());
  for (auto& label : labels) {
    for (std::size_t m = 0; m < colors.size(); ++m) {
      if (rng.bernoulli(density)) label.push_back(m);
    }
  }
  return LabeledTree(LeafSet(default_leaf_names(n)), colors, std::move(t), std::move(labels));
}

SymmetricMap random_symmetric_map(std::size_t n, const ColorSet& colors, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must lie in [0, 1]");
  Rng rng(seed);
  SymmetricMap map(LeafSet(default_leaf_names(n)), colors);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t m = 0; m < colors.size(); ++m) {
        if (rng.bernoulli(density)) map.insert(x, y, m);
      }
    }
  }
  return map;
}

SymmetricMap perturb_map(const SymmetricMap& map, std::size_t flips, std::uint64_t seed) {
  const std::size_t n = map.leaf_count();
  const std::size_t k = map.color_count();
  if (n < 2 || k == 0) return map;
  Rng rng(seed);
  std::vector<std::vector<bool>> bits(n * n, std::vector<bool>(k));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t m = 0; m < k; ++m) bits[x * n + y][m] = map.has(x, y, m);
    }
  }
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::size_t i = 0; i < flips; ++i) {
    std::size_t p = rng.below(pairs);
    const std::size_t m = rng.below(k);
    std::size_t x = 0;
    while (p >= n - 1 - x) {
      p -= n - 1 - x;
      ++x;
    }
    const std::size_t y = x + 1 + p;
    bits[x * n + y][m] = !bits[x * n + y][m];
  }
  SymmetricMap out(map.leaves(), map.colors());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t m = 0; m < k; ++m) {
        if (bits[x * n + y][m]) out.insert(x, y, m);
      }
    }
  }
  return out;
}

}  // namespace symfitch
