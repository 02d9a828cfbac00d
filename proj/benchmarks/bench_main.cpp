#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mackey/catalog.hpp"
#include "mackey/mackey_algebra.hpp"
#include "mackey/report.hpp"

using namespace mackey;

namespace {

const std::vector<std::string> kGroups = {"symmetric:3", "dihedral:4", "alternating:4", "dihedral:6", "symmetric:4"};

void BM_Lattice(benchmark::State& state) {
  const auto g = parse_group(kGroups[state.range(0)]);
  for (auto _ : state) {
    SubgroupLattice lat(g);
    benchmark::DoNotOptimize(lat.num_classes());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Lattice)->DenseRange(0, 4);

void BM_BurnsideDet(benchmark::State& state) {
  const BurnsideRing b(parse_group(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(b_phi_matrix(b, TraceFamily::integral())));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_BurnsideDet)->DenseRange(0, 4);

void BM_MackeyMatrix(benchmark::State& state) {
  const BurnsideRing b(parse_group(kGroups[state.range(0)]));
  const MackeyAlgebra alg(b);
  const TraceForm phi(b, TraceFamily::integral());
  for (auto _ : state) benchmark::DoNotOptimize(bilinear_matrix(alg, phi).matrix.nonzeros());
  state.SetLabel(kGroups[state.range(0)] + " rank " + std::to_string(alg.rank()));
}
BENCHMARK(BM_MackeyMatrix)->DenseRange(0, 3);

void BM_Verdict(benchmark::State& state) {
  const BurnsideRing b(parse_group(kGroups[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(verdict(b, RingSpec::integers()).verdict);
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Verdict)->DenseRange(0, 2);

}  // namespace
BENCHMARK_MAIN();
