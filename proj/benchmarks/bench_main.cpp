#include <benchmark/benchmark.h>

#include "hgs/automorphisms.hpp"
#include "hgs/constructions.hpp"
#include "hgs/engine.hpp"
#include "hgs/groupspec.hpp"
#include "hgs/minimality.hpp"
#include "hgs/subgroups.hpp"

using namespace hgs;

static void BM_ClosureS8(benchmark::State& state) {
  const Perm gens[] = {Perm::from_cycles(8, {{0, 1}}), Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6}})};
  for (auto _ : state) {
    // S(7) on the first seven points, 5040 elements.
    benchmark::DoNotOptimize(closure(gens, 8));
  }
}
BENCHMARK(BM_ClosureS8)->Unit(benchmark::kMillisecond);

static void BM_AutomorphismGroupA5(benchmark::State& state) {
  const FiniteGroup a5 = alternating(5);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(a5));
}
BENCHMARK(BM_AutomorphismGroupA5)->Unit(benchmark::kMillisecond);

static void BM_HolomorphA5(benchmark::State& state) {
  const FiniteGroup a5 = alternating(5);
  for (auto _ : state) {
    const Holomorph hol = holomorph(a5);
    benchmark::DoNotOptimize(gamma_subgroups(hol));
  }
}
BENCHMARK(BM_HolomorphA5)->Unit(benchmark::kMillisecond);

static void BM_AllSubgroupsS4(benchmark::State& state) {
  const FiniteGroup s4 = symmetric(4);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(s4));
}
BENCHMARK(BM_AllSubgroupsS4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateGaloisC8(benchmark::State& state) {
  const CosetAction act(ExtensionProblem::galois(cyclic(8)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_sets(act));
}
BENCHMARK(BM_EnumerateGaloisC8)->Unit(benchmark::kMillisecond);

static void BM_PointTransversalC8(benchmark::State& state) {
  const CosetAction act(ExtensionProblem::galois(cyclic(8)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_point_transversal(act));
}
BENCHMARK(BM_PointTransversalC8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateGaloisD5(benchmark::State& state) {
  const CosetAction act(ExtensionProblem::galois(dihedral(5)));
  EngineOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  EngineStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_sets(act, options, &stats));
  state.counters["nodes"] = static_cast<double>(stats.nodes);
  state.counters["candidates"] = static_cast<double>(stats.candidates);
}
BENCHMARK(BM_EnumerateGaloisD5)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_EnumerateGaloisE8(benchmark::State& state) {
  const CosetAction act(ExtensionProblem::galois(elementary_abelian(2, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_sets(act));
}
BENCHMARK(BM_EnumerateGaloisE8)->Unit(benchmark::kMillisecond);

static void BM_ClassifyOrder36(benchmark::State& state) {
  const BuiltGroup g = build_group("SD(E(3,2), matgrp(3,2,[[[0,1],[-1,0]]]))");
  const ExtensionProblem prob(g.group, *g.complement);
  for (auto _ : state) benchmark::DoNotOptimize(classify(prob));
}
BENCHMARK(BM_ClassifyOrder36)->Unit(benchmark::kMillisecond);

static void BM_ParseAndBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_group("SD(E(2,3), matgrp(2,3,[[[1,1,1],[1,1,0],[1,0,0]]]))"));
  }
}
BENCHMARK(BM_ParseAndBuild)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
