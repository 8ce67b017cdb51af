#include <benchmark/benchmark.h>

#include "csec/csection.hpp"
#include "csec/iso.hpp"
#include "csec/lattice.hpp"
#include "csec/named.hpp"
#include "csec/series.hpp"

using namespace csec;

static void BM_SchreierSimsSymmetric(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_group(n).order());
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_SchreierSimsPsl2(benchmark::State& state) {
  auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psl2_group(q).order());
}
BENCHMARK(BM_SchreierSimsPsl2)->Arg(7)->Arg(17)->Arg(49)->Arg(101);

static void BM_SubgroupLattice(benchmark::State& state) {
  const PermGroup groups[] = {symmetric_group(5), alternating_group(6), symmetric_group(6), pgl2_group(7)};
  const auto& g = groups[state.range(0)];
  for (auto _ : state) {
    GroupContext ctx(g);
    benchmark::DoNotOptimize(ctx.subgroup_classes().size());
  }
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_MaximalClasses(benchmark::State& state) {
  auto g = pgl2_group(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    GroupContext ctx(g);
    benchmark::DoNotOptimize(ctx.maximal_classes().size());
  }
}
BENCHMARK(BM_MaximalClasses)->Arg(7)->Arg(9)->Arg(11)->Arg(17)->Unit(benchmark::kMillisecond);

static void BM_ChiefSeries(benchmark::State& state) {
  auto g = direct_product({symmetric_group(4), symmetric_group(3)});
  for (auto _ : state) benchmark::DoNotOptimize(chief_series(g).factors.size());
}
BENCHMARK(BM_ChiefSeries)->Unit(benchmark::kMillisecond);

static void BM_Isomorphism(benchmark::State& state) {
  std::pair<PermGroup, PermGroup> pairs[] = {{psl2_group(9), alternating_group(6)},
                                             {psl2_group(4), psl2_group(5)},
                                             {pgl2_group(5), symmetric_group(5)},
                                             {dihedral_group(8), quaternion_group()}};
  const auto& [a, b] = pairs[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(a, b));
}
BENCHMARK(BM_Isomorphism)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Identify(benchmark::State& state) {
  auto g = psl2_group(7);
  for (auto _ : state) benchmark::DoNotOptimize(identify(g));
}
BENCHMARK(BM_Identify)->Unit(benchmark::kMillisecond);

static void BM_Pgl2Example(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_pgl2_example(7).status);
}
BENCHMARK(BM_Pgl2Example)->Unit(benchmark::kMillisecond);

static void BM_TheoremScan(benchmark::State& state) {
  auto battery = scan_battery(500);
  for (auto _ : state)
    for (const auto& spec : battery) {
      GroupContext ctx(build_group(spec));
      benchmark::DoNotOptimize(verify_theorem_instance(ctx).status);
    }
}
BENCHMARK(BM_TheoremScan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
