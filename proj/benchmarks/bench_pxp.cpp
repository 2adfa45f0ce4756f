#include <benchmark/benchmark.h>

#include <numbers>

#include "pxp/effective.hpp"
#include "pxp/experiments.hpp"
#include "pxp/hilbert.hpp"
#include "pxp/operators.hpp"
#include "pxp/propagator.hpp"
#include "pxp/protocols.hpp"
#include "pxp/seqstats.hpp"

using namespace pxp;

namespace {

DriveParams u4_drive() {
  DriveParams p;
  p.w = 1.0;
  p.lambda = 4.0 * std::numbers::pi;
  p.period = 0.5;
  p.jitter = 0.125;
  p.delta_w = 0.02;
  p.seed = 3;
  return p;
}

}  // namespace

static void BM_Basis(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(FockBasis(L, BoundaryCondition::Periodic).dimension());
}
BENCHMARK(BM_Basis)->Arg(12)->Arg(16)->Arg(20);

static void BM_Diagonalize(benchmark::State& state) {
  const FockBasis basis(static_cast<int>(state.range(0)), BoundaryCondition::Periodic);
  const OperatorMatrix h = build_hamiltonian(basis, {1, 1, 1.0, 10.0, 0.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h).energies.data());
  state.counters["dim"] = static_cast<double>(basis.dimension());
}
BENCHMARK(BM_Diagonalize)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_PropagatorFromSpectrum(benchmark::State& state) {
  const FockBasis basis(static_cast<int>(state.range(0)), BoundaryCondition::Periodic);
  const SpectralDecomposition s = diagonalize(build_hamiltonian(basis, {1, 1, 1.0, 10.0, 0.0, 0.0}));
  for (auto _ : state) benchmark::DoNotOptimize(propagator(s, 0.25).unitary.data());
}
BENCHMARK(BM_PropagatorFromSpectrum)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Evolve(benchmark::State& state) {
  const FockBasis basis(static_cast<int>(state.range(0)), BoundaryCondition::Periodic);
  const Propagator u = propagator(diagonalize(build_hamiltonian(basis, {1, 1, 1.0, 10.0, 0.0, 0.0})), 0.25);
  StateVector psi = all_down_state(basis), scratch;
  for (auto _ : state) {
    evolve_in_place(psi, u.unitary, scratch);
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_Evolve)->Arg(10)->Arg(12)->Arg(14);

static void BM_RunU4(benchmark::State& state) {
  const FockBasis basis(static_cast<int>(state.range(0)), BoundaryCondition::Periodic);
  const DriveParams p = u4_drive();
  for (auto _ : state) benchmark::DoNotOptimize(run_protocol(basis, p, ProtocolKind::U4, 200).records.size());
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_RunU4)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_RunDipolarTM(benchmark::State& state) {
  const FockBasis basis(12, BoundaryCondition::Periodic);
  DriveParams p;
  p.period = std::numbers::pi / 4.0;
  p.delta_lambda = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_protocol(basis, p, ProtocolKind::DipolarThueMorse, 1000).records.size());
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_RunDipolarTM)->Unit(benchmark::kMillisecond);

static void BM_ScanCells(benchmark::State& state) {
  ScanSpec spec;
  spec.kind = ProtocolKind::U4;
  spec.length = 8;
  spec.base = u4_drive();
  spec.axis1 = {"lambda_T_over_4pi", linspace(0.5, 1.0, 3)};
  spec.axis2 = {"dw_over_w", linspace(0.0, 0.2, 4)};
  spec.cycles = 300;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_2d(spec, threads).cells.size());
  state.SetItemsProcessed(state.iterations() * 12);
}
BENCHMARK(BM_ScanCells)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_ExtractHeff(benchmark::State& state) {
  const FockBasis basis(10, BoundaryCondition::Periodic);
  DriveParams p;
  p.lambda = 10.0;
  p.jitter = std::numbers::pi / 20.0;
  PropagatorCache cache(basis);
  const Propagator u = cycle_unitary_u3(p, {1, -1, 1, -1}, cache);
  for (auto _ : state) benchmark::DoNotOptimize(extract_heff(u, p.jitter).generator.data());
}
BENCHMARK(BM_ExtractHeff)->Unit(benchmark::kMillisecond);

static void BM_ReducedLengthBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(avg_reduced_length_bruteforce(n, 1));
}
BENCHMARK(BM_ReducedLengthBruteForce)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
