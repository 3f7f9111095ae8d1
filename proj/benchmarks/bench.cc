// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "photonsim/cv_states.hpp"
#include "photonsim/detection.hpp"
#include "photonsim/fusion.hpp"
#include "photonsim/interferometer.hpp"
#include "photonsim/klm.hpp"
#include "photonsim/mbqc.hpp"
#include "photonsim/resource.hpp"

using namespace photonsim;

namespace {

// A fixed 4-mode network of beamsplitters, dense enough to spread photons
// over every mode.
ModeUnitary mixing_network(std::size_t n) {
  ModeUnitary u = ModeUnitary::identity(n);
  for (int layer = 0; layer < 2; ++layer) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      u = u.then(ModeUnitary::embed(beamsplitter(0.4 + 0.1 * i, 0.3 * layer), {i, i + 1}, n));
    }
  }
  return u;
}

void BM_ApplyUnitary(benchmark::State& state) {
  const int photons = static_cast<int>(state.range(0));
  const std::size_t modes = 4;
  Occupation occ(modes, 0);
  for (int p = 0; p < photons; ++p) ++occ[p % modes];
  const FockState in = make_fock(occ, photons);
  const ModeUnitary u = mixing_network(modes);
  for (auto _ : state) benchmark::DoNotOptimize(apply_unitary(in, u, {0, 1, 2, 3}));
  state.SetLabel(std::to_string(photons) + " photons on 4 modes");
}
BENCHMARK(BM_ApplyUnitary)->DenseRange(2, 8, 2);

void BM_NsGate(benchmark::State& state) {
  const NSGate gate;
  FockState in(1, 2);
  in.set({0}, 0.6);
  in.set({1}, 0.6);
  in.set({2}, 0.52915026221291817);
  for (auto _ : state) benchmark::DoNotOptimize(gate.apply(in));
}
BENCHMARK(BM_NsGate);

void BM_CzGate(benchmark::State& state) {
  const CZGate gate;
  const DualRailRegister reg = DualRailRegister::from_logical({0.5, 0.5, 0.5, 0.5}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gate.apply(reg, 0, 1));
}
BENCHMARK(BM_CzGate);

void BM_BuildLinearCluster(benchmark::State& state) {
  const ClusterGraph g = ClusterGraph::linear(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_cluster(g));
}
BENCHMARK(BM_BuildLinearCluster)->DenseRange(2, 8, 2);

void BM_TypeIFusionBranches(benchmark::State& state) {
  ClusterGraph g = ClusterGraph::linear(3);
  g.merge_disjoint(ClusterGraph::linear(3, 3));
  const DualRailRegister reg = build_cluster(g);
  for (auto _ : state) benchmark::DoNotOptimize(fusion_type1_branches(reg, 2, 3));
}
BENCHMARK(BM_TypeIFusionBranches);

void BM_MbqcCnotBranches(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mbqc_cnot_branches(1, 1));
}
BENCHMARK(BM_MbqcCnotBranches);

void BM_GrowLinearCluster(benchmark::State& state) {
  const unsigned workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grow_linear_cluster(30, GrowthStrategy{}, 10000, 0, workers, 20));
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_GrowLinearCluster)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_HomCoincidenceSimulated(benchmark::State& state) {
  const PulseShape pulse(1.0);
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_coincidence_simulated(pulse, tau));
    tau = tau > 5 ? -5 : tau + 0.01;
  }
}
BENCHMARK(BM_HomCoincidenceSimulated);

void BM_QuadraturePdf(benchmark::State& state) {
  const FockState s = coherent_state({1.0, 0.5}, static_cast<int>(state.range(0)));
  const QuadratureGrid grid = QuadratureGrid::for_cutoff(static_cast<int>(state.range(0)), 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_pdf(s, {0.3, 1.0}, grid));
}
BENCHMARK(BM_QuadraturePdf)->Arg(20)->Arg(60);

void BM_Squeeze(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const FockState vac = FockState::vacuum(1, cutoff);
  for (auto _ : state) benchmark::DoNotOptimize(squeeze(vac, {0.5, 0.2}));
}
BENCHMARK(BM_Squeeze)->Arg(40)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_GkpState(benchmark::State& state) {
  const GKPParams p;
  for (auto _ : state) benchmark::DoNotOptimize(gkp_state(p, 0, {1.2, 0.0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GkpState)->Arg(400)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_KrausTotalProbability(benchmark::State& state) {
  const GridState in = to_grid(squeezed_vacuum({1.0, std::numbers::pi / 2}, 80), QuadratureGrid{-12, 12, 9001});
  const KrausParams k;
  for (auto _ : state) benchmark::DoNotOptimize(kraus_total_probability(in, k, -14, 14, 501));
}
BENCHMARK(BM_KrausTotalProbability)->Unit(benchmark::kMillisecond);

void BM_GbsHerald(benchmark::State& state) {
  GBSSchemeSpec spec = GBSSchemeSpec::defaults();
  spec.cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbs_herald(spec));
}
BENCHMARK(BM_GbsHerald)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
