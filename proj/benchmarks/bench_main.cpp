#include <benchmark/benchmark.h>

#include <random>

#include "tightcycle/edge_oracle.hpp"
#include "tightcycle/exact.hpp"
#include "tightcycle/fray.hpp"
#include "tightcycle/pathfinder.hpp"

using namespace tightcycle;

namespace {

void BM_OracleQuery(benchmark::State& state) {
  const Params params = derive_params(2000, 3, 2);
  const auto mode = state.range(0) ? MemoMode::tracked : MemoMode::untracked;
  EdgeOracle oracle = EdgeOracle::hashed(params, {0.002, 0.0002}, 1, mode);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Vertex> pick(0, 1999);
  for (auto _ : state) {
    Vertex a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    benchmark::DoNotOptimize(oracle.query(KSet{a, b, c}, 0));
  }
}
BENCHMARK(BM_OracleQuery)->Arg(0)->Arg(1);

void BM_Pathfinder(benchmark::State& state) {
  const Params params = derive_params(static_cast<int>(state.range(0)), 3, 2);
  const RunConstants consts = default_constants(params, 4.0);
  std::uint64_t seed = 0;
  std::uint64_t queries = 0;
  for (auto _ : state) {
    EdgeOracle oracle = EdgeOracle::hashed(params, {static_cast<double>(consts.p(params))}, ++seed, MemoMode::untracked);
    DfsOptions options;
    options.start_seed = seed;
    const DfsOutcome out = run_pathfinder(oracle, params, consts, 0, options);
    queries += out.queries;
    benchmark::DoNotOptimize(out.path.seq.data());
  }
  state.counters["queries/s"] = benchmark::Counter(static_cast<double>(queries), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Pathfinder)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Family(benchmark::State& state) {
  const Params params = derive_params(static_cast<int>(state.range(0)), 3, 2);
  const RunConstants consts = default_constants(params, 4.0);
  EdgeOracle oracle = EdgeOracle::hashed(params, {static_cast<double>(consts.p_first(params))}, 5, MemoMode::untracked);
  const std::int64_t target = p0_length(params, consts) + 2 * default_stub(params, consts);
  DfsOptions options;
  options.target = target;
  const DfsOutcome dfs = run_pathfinder(oracle, params, consts, 0, options);
  if (dfs.path.length() < target) {
    state.SkipWithError("search fell short of the family's P0'");
    return;
  }
  const TightPath p0_prime = dfs.path.subpath(dfs.path.length() - target, target);
  for (auto _ : state) {
    const AugmentingFamily family = build_family(oracle, params, consts, p0_prime, 0);
    benchmark::DoNotOptimize(family.disjoint_pairs);
  }
}
BENCHMARK(BM_Family)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_BruteCycle(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  std::vector<KSet> edges;
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a)
    for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b)
      for (Vertex c = b + 1; c < static_cast<Vertex>(n); ++c)
        if (rng() & 1) edges.push_back(KSet{a, b, c});
  const SmallInstance inst = make_instance(n, 3, 2, edges);
  for (auto _ : state) benchmark::DoNotOptimize(brute_longest_cycle(inst));
}
BENCHMARK(BM_BruteCycle)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
