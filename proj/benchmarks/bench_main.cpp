#include <benchmark/benchmark.h>

#include "ceit/meanfield.hpp"
#include "ceit/qme.hpp"
#include "ceit/sweep.hpp"

namespace {

ceit::SystemParams bistable_point() {
  ceit::SystemParams p;
  p.delta_c = -0.48;
  p.u0 = 8.0;
  p.eta = 0.155;
  return p;
}

void BM_QuinticSolve(benchmark::State& state) {
  const ceit::SystemParams p = bistable_point();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceit::solve_steady_states(p));
  }
}
BENCHMARK(BM_QuinticSolve);

void BM_SteadyState(benchmark::State& state) {
  const ceit::SystemParams p = bistable_point();
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceit::solve_fixed_cutoff(p, n_max));
  }
  state.SetLabel("dim=" + std::to_string(3 * (n_max + 1)));
}
BENCHMARK(BM_SteadyState)->Arg(5)->Arg(10)->Arg(15)->Arg(20);

void BM_G2Tau(benchmark::State& state) {
  const ceit::SystemParams p = bistable_point();
  const ceit::SteadyStateResult res = ceit::solve_for_sweep(p);
  const ceit::HilbertSpace space(res.n_max_used);
  const ceit::OperatorSet ops = ceit::build_operators(space);
  const ceit::Liouvillian liou = ceit::build_liouvillian(p, ops);
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(0.2 * i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceit::g2_tau(res.rho, liou, ops, grid));
  }
}
BENCHMARK(BM_G2Tau);

void BM_PhaseDiagramMfa(benchmark::State& state) {
  ceit::SweepSpec spec;
  spec.base.eta = 0.6;
  spec.axis1 = {ceit::SweepAxis::DeltaC, -2.0, 8.0, 100};
  spec.axis2 = ceit::AxisSpec{ceit::SweepAxis::U0, 0.0, 24.0, 100};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ceit::phase_diagram_2d(spec));
  }
}
BENCHMARK(BM_PhaseDiagramMfa);

}  // namespace

BENCHMARK_MAIN();
