#include "graphdss/analysis.hpp"
#include "graphdss/catalog.hpp"
#include "graphdss/code.hpp"
#include "graphdss/repair.hpp"
#include "graphdss/tour.hpp"

#include <benchmark/benchmark.h>

using namespace graphdss;

namespace {

// Argument is the cage girth, 3..6.
Graph cage_graph(const benchmark::State& state) {
  return cage(static_cast<std::size_t>(state.range(0))).graph;
}

void BM_Girth(benchmark::State& state) {
  const Graph g = default_system(cage_graph(state)).cubic;
  for (auto _ : state) benchmark::DoNotOptimize(girth(g));
}
BENCHMARK(BM_Girth)->DenseRange(3, 6);

void BM_BuildCubic(benchmark::State& state) {
  const Graph g = cage_graph(state);
  for (auto _ : state) {
    const OrientedGraph gd = orient_from_tour(g, eulerian_tour(g));
    benchmark::DoNotOptimize(build_cubic(gd, PairingPolicy::uniform(g.vertex_count(),
                                                                    Pairing::Parallel)));
  }
}
BENCHMARK(BM_BuildCubic)->DenseRange(3, 6);

void BM_DeriveCode(benchmark::State& state) {
  const Graph g = default_system(cage_graph(state)).cubic;
  for (auto _ : state) benchmark::DoNotOptimize(derive_code(g));
}
BENCHMARK(BM_DeriveCode)->DenseRange(3, 6);

void BM_PeelGirthMinusOneDisks(benchmark::State& state) {
  const Graph base = cage_graph(state);
  const CubicSystem sys = default_system(base);
  std::vector<std::size_t> disks(*girth(base) - 1);
  for (std::size_t i = 0; i < disks.size(); ++i) disks[i] = i;
  const EdgeSubset erased = sys.disk_edge_set(disks);
  for (auto _ : state) benchmark::DoNotOptimize(peel(sys, erased));
}
BENCHMARK(BM_PeelGirthMinusOneDisks)->DenseRange(3, 6);

void BM_RepairStateOneDisk(benchmark::State& state) {
  const CubicSystem sys = default_system(cage(6).graph);
  const ParityCode code = derive_code(sys.cubic);
  const std::size_t block = static_cast<std::size_t>(state.range(0));
  std::vector<Block> data(code.dimension, Block(block, 0x5a));
  const StorageState original = encode(code, data);
  const RepairReport report = repair_disk(sys, 0, DiskRepairStrategy::MinBandwidth);
  for (auto _ : state) benchmark::DoNotOptimize(repair_state(code, original, report));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * 3 * block));
}
BENCHMARK(BM_RepairStateOneDisk)->Range(64, 1 << 16);

void BM_RecoveryBoundExhaustive(benchmark::State& state) {
  const Graph base = cage_graph(state);
  const CubicSystem sys = default_system(base);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_recovery_bound(sys, base, Exhaustive{}));
  }
}
BENCHMARK(BM_RecoveryBoundExhaustive)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
