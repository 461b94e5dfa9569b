#include <benchmark/benchmark.h>

#include "divseek/averaging.hpp"
#include "divseek/simulate.hpp"

using namespace divseek;

static void BM_sphere_param(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Vec theta = Vec::LinSpaced(n - 1, 0.3, 2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphere_param(theta));
  }
}
BENCHMARK(BM_sphere_param)->Arg(2)->Arg(3)->Arg(4);

static void BM_averaged_objective(benchmark::State& state) {
  const auto J = make_ringed_gaussian(3);
  const Vec x{{1.0, 0.5, -0.5}};
  QuadratureSpec quad;
  quad.angular_nodes = static_cast<int>(state.range(0));
  quad.radial_nodes = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_objective(J, x, 1.0, quad));
  }
}
BENCHMARK(BM_averaged_objective)->Arg(16)->Arg(32)->Arg(64);

static void BM_averaged_gradient(benchmark::State& state) {
  const auto J = make_ringed_gaussian(3);
  const Vec x{{1.0, 0.5, -0.5}};
  QuadratureSpec quad;
  quad.angular_nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_gradient(J, x, 1.0, quad));
  }
}
BENCHMARK(BM_averaged_gradient)->Arg(16)->Arg(32)->Arg(64);

static void BM_dither_field(benchmark::State& state) {
  const auto J = make_ringed_gaussian(3);
  const Vec x{{1.0, 0.5, -0.5}};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dither_field(J, x, 1.0, 1.0, k));
  }
}
BENCHMARK(BM_dither_field)->Arg(1)->Arg(2)->Arg(3);

static void BM_closed_loop_rhs(benchmark::State& state) {
  const auto J = make_ringed_gaussian(3);
  ControlParams p{.n = 3, .a = 1.0, .b = 1.0, .h = 1.0, .omega = 1.0, .k = 2};
  const auto dist = DisturbanceSpec::zero();
  SimState s{Vec{{3.0, 3.0, 3.0}}, 0.0, 0.37};
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_loop_rhs(s, J, p, dist));
  }
}
BENCHMARK(BM_closed_loop_rhs);

static void BM_simulate_short_run(benchmark::State& state) {
  const auto J = make_perturbed_decay(2);
  ControlParams p{.n = 2, .a = 0.2, .b = 1.0, .h = 1.0, .omega = 2.0, .k = 1};
  IntegratorSpec spec;
  spec.t_final = 1.0;
  spec.record_stride = 1 << 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_closed_loop(J, p, DisturbanceSpec::zero(), Vec{{-3.0, 0.0}}, 0.0, spec));
  }
}
BENCHMARK(BM_simulate_short_run);

BENCHMARK_MAIN();
