#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "symfitch/symmetric_map.hpp"
#include "symfitch/tree.hpp"

namespace symfitch {

// std::mt19937_64 with hand-rolled sampling so that every platform draws
// the same instances from the same seed (the std distributions are
// implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), by rejection of the biased low range. bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Binary topology by inserting leaves 3..n-1 on uniformly chosen edges of a
// star on the first three (a single edge when n == 2). Every (edge, color)
// pair is labeled independently with probability `density`. Leaves are
// named by default_leaf_names. Throws PreconditionError unless n >= 2 and
// 0 <= density <= 1.
LabeledTree random_labeled_tree(std::size_t n, const ColorSet& colors, double density, std::uint64_t seed);

// Every (pair, color) bit set independently with probability `density`.
SymmetricMap random_symmetric_map(std::size_t n, const ColorSet& colors, double density, std::uint64_t seed);

// Flips `flips` (pair, color) bits chosen uniformly with replacement.
SymmetricMap perturb_map(const SymmetricMap& map, std::size_t flips, std::uint64_t seed);

}  // namespace symfitch
