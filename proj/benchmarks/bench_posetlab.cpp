#include <benchmark/benchmark.h>

#include <random>

#include "posetlab/analysis.hpp"
#include "posetlab/catalog.hpp"
#include "posetlab/chains.hpp"
#include "posetlab/isomorphism.hpp"
#include "posetlab/random_poset.hpp"

using namespace posetlab;

static void BM_ChainPosetBoolean(benchmark::State& state) {
  const auto base = boolean(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chain_poset(base, 3));
  }
}
BENCHMARK(BM_ChainPosetBoolean)->DenseRange(2, 5);

static void BM_ChainPosetIsotropic(benchmark::State& state) {
  const auto base = isotropic(3);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chain_poset(base, k));
  }
}
BENCHMARK(BM_ChainPosetIsotropic)->DenseRange(1, 3);

static void BM_IsNormal(benchmark::State& state) {
  const auto p = chain_poset(isotropic(static_cast<std::size_t>(state.range(0))), 2).poset;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_normal(p));
  }
  state.counters["elements"] = static_cast<double>(p.size());
}
BENCHMARK(BM_IsNormal)->DenseRange(1, 3);

static void BM_MaxJFamily(benchmark::State& state) {
  const auto p = chain_poset(boolean(4), 2).poset;
  const auto j = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_j_family(p, j));
  }
}
BENCHMARK(BM_MaxJFamily)->Arg(1)->Arg(3)->Arg(5);

static void BM_StronglySperner(benchmark::State& state) {
  const auto p = chain_poset(isotropic(2), static_cast<std::size_t>(state.range(0))).poset;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_strongly_sperner(p));
  }
}
BENCHMARK(BM_StronglySperner)->DenseRange(1, 3);

static void BM_Isomorphism(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = isotropic(n);
  const auto q = power(isotropic(1), n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_isomorphic(p, q));
  }
}
BENCHMARK(BM_Isomorphism)->DenseRange(2, 4);

static void BM_RandomGradedAnalysis(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<Poset> sample;
  for (int i = 0; i < 32; ++i) sample.push_back(random_graded_poset(40, rng));
  for (auto _ : state) {
    for (const auto& p : sample) benchmark::DoNotOptimize(is_normal(p));
  }
}
BENCHMARK(BM_RandomGradedAnalysis);
BENCHMARK_MAIN();
