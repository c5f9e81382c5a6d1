#include <benchmark/benchmark.h>

#include <cmath>

#include "srpt/hamiltonian.hpp"
#include "srpt/meanfield.hpp"
#include "srpt/spectrum.hpp"
#include "srpt/thermal.hpp"

using namespace srpt;

namespace {

ValidatedSpec bamba(int n, double l_r) {
  CircuitSpec s;
  s.topology = Topology::Fig5c_BambaCircuit;
  s.n_cells = n;
  s.resonator = ResonatorParams{l_r, 1e-12};
  CellParams c;
  c.l_c = 1e-9;
  c.e_j = 6.6e-24;
  c.c_j = 1e-12;
  c.phi_ext_over_phi_q = 0.5;
  s.cell = c;
  return validate_or_throw(s);
}

TruncatedBasis basis(int photon, int cell) {
  TruncatedBasis b;
  b.photon_cutoff = photon;
  b.cell_cutoff = cell;
  return b;
}

void BM_Assemble(benchmark::State& state) {
  const HamiltonianModel m = build_hamiltonian(bamba(2, 8e-9));
  const TruncatedBasis b = basis(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_matrix(m, b));
}
BENCHMARK(BM_Assemble)->Args({16, 8})->Args({24, 14})->Unit(benchmark::kMillisecond);

void BM_LanczosGround(benchmark::State& state) {
  const AssembledMatrix a = assemble_matrix(build_hamiltonian(bamba(2, 8e-9)),
                                            basis(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  EigenOptions opt;
  opt.dense_threshold = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(a, 3, opt));
  state.counters["dim"] = static_cast<double>(a.layout.dimension);
}
BENCHMARK(BM_LanczosGround)->Args({16, 8})->Args({24, 14})->Unit(benchmark::kMillisecond);

void BM_MinimizePotential(benchmark::State& state) {
  const EffectivePotential p = effective_potential(2e-9, 1e-10, 1e-22, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_potential(p));
}
BENCHMARK(BM_MinimizePotential)->Arg(2)->Arg(32);

void BM_CellThermal(benchmark::State& state) {
  const CellThermal cell(1.0, 1.0, 2.0, 0.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cell.evaluate(0.4, 0.5));
}
BENCHMARK(BM_CellThermal)->Arg(32)->Arg(128);

}  // namespace
BENCHMARK_MAIN();
