#include <benchmark/benchmark.h>

#include "warpmech/canonical.hpp"
#include "warpmech/flow.hpp"
#include "warpmech/recursion.hpp"

using namespace warpmech;

namespace {

Vec8d godel_point() { return Vec8d{0.0, 1.0, 0.0, 0.0, 0.2, 0.7, 0.3, 0.05}; }

void HamiltonianField(benchmark::State& state) {
  MetricModel m = state.range(0) == 0 ? MetricModel::alcubierre(VsProfile::constant(0.5))
                                      : MetricModel::godel_approx(0.05);
  Vec8d x = godel_point();
  for (auto _ : state) {
    Vec8d f = hamiltonian_field_value(m, x);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(HamiltonianField)->Arg(0)->Arg(1);

void MidpointStep(benchmark::State& state) {
  MetricModel m = MetricModel::godel_approx(0.05);
  Rhs f = [m](const Vec8d& x) { return hamiltonian_field_value(m, x); };
  IntegratorSpec spec;
  spec.dt = 1e-3;
  Vec8d x = godel_point();
  for (auto _ : state) {
    x = step(f, x, spec);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(MidpointStep);

void CanonicalRoundTrip(benchmark::State& state) {
  BranchSpec wa = BranchSpec::alcubierre_wa(VsProfile::constant(0.5), 0.0);
  Vec8d x{2.0, 0.0, 0.0, 0.0, -1.5, 1.0, 0.0, 0.0};
  for (auto _ : state) {
    Vec8d y = from_action(wa, to_action(wa, x));
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(CanonicalRoundTrip);

void TorsionActionOperator(benchmark::State& state) {
  TensorField t = recursion_action();
  Vec8d x{1.3, 0.7, 2.1, 0.4, 0.0, 0.1, 0.2, 0.3};
  for (auto _ : state) {
    double n = nijenhuis_max(t, x);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(TorsionActionOperator);

void TorsionGodelOperator(benchmark::State& state) {
  TensorField t = recursion_godel(0.3);
  Vec8d x = godel_point();
  for (auto _ : state) {
    double n = nijenhuis_max(t, x);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(TorsionGodelOperator);

void Eigenvalues8x8(benchmark::State& state) {
  Mat8d t = recursion_alcubierre_value<double>(VsProfile::constant(0.5),
                                               Vec8d{0.5, 0, 0, 0, 1.6, 0.9, 0.3, -0.2});
  for (auto _ : state) {
    auto ev = eigenvalues(t);
    benchmark::DoNotOptimize(ev);
  }
}
BENCHMARK(Eigenvalues8x8);

}  // namespace

BENCHMARK_MAIN();
