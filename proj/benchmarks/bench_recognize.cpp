#include <benchmark/benchmark.h>

#include "symfitch/compat.hpp"
#include "symfitch/neighborhoods.hpp"
#include "symfitch/random.hpp"
#include "symfitch/recognize.hpp"
#include "symfitch/reduction.hpp"

using namespace symfitch;

namespace {

// Tree-generated maps: every instance is Fitch, so the search must finish.
void BM_RecognizeTreeMap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<SymmetricMap> maps;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const auto t = random_labeled_tree(n, ColorSet(numbered_names(5)), 0.3, seed);
    maps.push_back(explain(t, t.colors()));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize(maps[i++ % maps.size()]));
  }
}
BENCHMARK(BM_RecognizeTreeMap)->DenseRange(8, 16, 2)->Unit(benchmark::kMicrosecond);

// One flipped entry usually breaks the map; rejection cost matters as much.
void BM_RecognizePerturbed(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<SymmetricMap> maps;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const auto t = random_labeled_tree(n, ColorSet(numbered_names(5)), 0.3, seed);
    maps.push_back(perturb_map(explain(t, t.colors()), 1, seed));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize(maps[i++ % maps.size()]));
  }
}
BENCHMARK(BM_RecognizePerturbed)->DenseRange(8, 16, 2)->Unit(benchmark::kMicrosecond);

void BM_ExactCompatibilityQuartets(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<QuartetSet> sets;
  for (std::uint64_t seed = 0; seed < 16; ++seed) sets.push_back(random_quartet_set(n, n, seed));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_compatibility(sets[i++ % sets.size()].quartets, n));
  }
}
BENCHMARK(BM_ExactCompatibilityQuartets)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_ExactCompatibilityParallel(benchmark::State& state) {
  const auto t = random_labeled_tree(16, ColorSet(numbered_names(5)), 0.3, 7);
  const auto system = full_subsplit_systems(explain(t, t.colors())).nontrivial;
  SearchOptions options;
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_compatibility(system, options));
}
BENCHMARK(BM_ExactCompatibilityParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
