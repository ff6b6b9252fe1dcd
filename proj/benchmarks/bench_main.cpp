#include <benchmark/benchmark.h>

#include <random>

#include "psl2z/catalog.hpp"
#include "psl2z/elimination.hpp"
#include "psl2z/patterns.hpp"
#include "psl2z/rewriting.hpp"

using namespace psl2z;

static void BM_BareissR1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_R(Family::A1));
}
BENCHMARK(BM_BareissR1)->Unit(benchmark::kMillisecond);

static void BM_SpanDim6(benchmark::State& state) {
  Field f(FieldSpec::prime(10007));
  Rep r(family_x(f), family_y(ParamPair(f.from_int(2), f.from_int(3))));
  for (auto _ : state) benchmark::DoNotOptimize(burnside_span_dim(r));
}
BENCHMARK(BM_SpanDim6)->Unit(benchmark::kMillisecond);

static void BM_Intertwiner(benchmark::State& state) {
  Field f(FieldSpec::prime(10007));
  ParamPair p(f.from_int(2), f.from_int(3));
  Rep a(family_x(f), family_y(p)), b(family_x(f), family_y(orbit_map(3, p)));
  for (auto _ : state) benchmark::DoNotOptimize(intertwiner_space(a, b));
}
BENCHMARK(BM_Intertwiner)->Unit(benchmark::kMillisecond);

static void BM_SpremChain(benchmark::State& state) {
  auto id = static_cast<ChainId>(state.range(0));
  state.SetLabel(to_string(id));
  for (auto _ : state) benchmark::DoNotOptimize(run_sprem_chain(id, false));
}
BENCHMARK(BM_SpremChain)->Arg(static_cast<int>(ChainId::R1F1))->Arg(static_cast<int>(ChainId::R1F3_direct))->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
  for (auto _ : state)
    for (CaseId c : all_cases()) benchmark::DoNotOptimize(run_case_census(c));
}
BENCHMARK(BM_Census)->Unit(benchmark::kMillisecond);

static void BM_MonoidCube(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(monoid_span_bound(MonoidPreset::case234_cube));
}
BENCHMARK(BM_MonoidCube);
BENCHMARK_MAIN();
