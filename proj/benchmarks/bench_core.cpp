#include <benchmark/benchmark.h>

#include <random>

#include "jnt/chain.hpp"
#include "jnt/engine.hpp"
#include "jnt/subset.hpp"

using namespace jnt;

namespace {

Permutation perm(std::vector<std::uint16_t> v) { return Permutation(std::move(v)); }

GeneratedGroup agl32() {
  return GeneratedGroup(8, {perm({1, 0, 3, 2, 5, 4, 7, 6}),
                            perm({0, 4, 1, 5, 2, 6, 3, 7}),
                            perm({0, 3, 2, 1, 4, 7, 6, 5})});
}

std::vector<KSubset> random_subsets(unsigned v, unsigned k, std::size_t n) {
  std::mt19937 rng(7);
  std::vector<KSubset> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint16_t> pool(v);
    for (unsigned j = 0; j < v; ++j) pool[j] = static_cast<std::uint16_t>(j);
    for (unsigned j = 0; j < k; ++j) std::swap(pool[j], pool[j + rng() % (v - j)]);
    pool.resize(k);
    out.push_back(make_subset(pool));
  }
  return out;
}

void BM_johnson_distance(benchmark::State& state) {
  auto sets = random_subsets(276, 100, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(johnson_distance(sets[i & 255], sets[(i + 1) & 255]));
    ++i;
  }
}
BENCHMARK(BM_johnson_distance);

void BM_colex_rank(benchmark::State& state) {
  auto sets = random_subsets(24, 12, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(colex_rank(sets[i & 255]));
    ++i;
  }
}
BENCHMARK(BM_colex_rank);

void BM_colex_unrank(benchmark::State& state) {
  std::uint64_t r = 0;
  const std::uint64_t total = binomial(24, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(colex_unrank(r, 12, 24));
    r = (r + 997) % total;
  }
}
BENCHMARK(BM_colex_unrank);

void BM_subset_hash(benchmark::State& state) {
  auto sets = random_subsets(276, 100, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(subset_hash(sets[i & 255]));
    ++i;
  }
}
BENCHMARK(BM_subset_hash);

void BM_set_orbit(benchmark::State& state) {
  GeneratedGroup g = agl32();
  KSubset seed = make_subset({0, 1, 2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_indexed_orbit(g, seed, 1u << 20).size());
  }
}
BENCHMARK(BM_set_orbit);

void BM_flag_orbit(benchmark::State& state) {
  GeneratedGroup g = agl32();
  IndexedSetOrbit orb = build_indexed_orbit(g, make_subset({0, 1, 2, 3}), 1u << 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(triple_orbit_size(g, orb, 1u << 20));
  }
}
BENCHMARK(BM_flag_orbit);

void BM_chain_build(benchmark::State& state) {
  GeneratedGroup g = agl32();
  for (auto _ : state) {
    benchmark::DoNotOptimize(StabilizerChain::build(g).order());
  }
}
BENCHMARK(BM_chain_build);

} // namespace

BENCHMARK_MAIN();
