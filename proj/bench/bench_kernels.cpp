// Serial reference vs OpenMP kernels: 2D slices of both architectures and the
// brute-force oracle scan.

#include <benchmark/benchmark.h>

#include <cmath>

#include "hjnn/arch_one.hpp"
#include "hjnn/arch_two.hpp"
#include "hjnn/oracle.hpp"
#include "hjnn/slice.hpp"

using namespace hjnn;

namespace {

Point axis(std::size_t n, double head) {
  Point p(n, 0.0);
  p[0] = head;
  return p;
}

SliceSpec grid(std::size_t steps) {
  SliceSpec s;
  s.free_axes = {0, 1};
  s.ranges = {{-6.0, 6.0, steps}, {-6.0, 6.0, steps}};
  s.times = {1.0, 3.0};
  return s;
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::parallel : Execution::serial; }

void BM_f1_slice(benchmark::State& state) {
  const LagrangianNet net(ConvexFn::shifted_norm_plus(),
                          {{axis(10, -2.0), -0.5}, {Point(10, 0.0), 0.0}, {axis(10, 2.0), -1.0}});
  const auto spec = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f1_slice(net, spec, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.grid_size() * spec.times.size()));
}

void BM_f2_slice(benchmark::State& state) {
  const InitialDataNet net(ConcaveFn(ConvexFn::half_squared_norm()),
                           build_norm_hamiltonian(NormHamiltonian::l1, 5));
  const auto spec = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f2_slice(net, spec, mode(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.grid_size() * spec.times.size()));
}

void BM_oracle_scan(benchmark::State& state) {
  const RealPointFn initial = [](std::span<const double> x) { return -0.5 * x[0] * x[0]; };
  const PointFn hstar = [](std::span<const double> v) -> ExtendedScalar {
    return std::abs(v[0]) <= 1.0 ? ExtendedScalar(0.0) : kInfinity;
  };
  OracleConfig cfg;
  cfg.pts_per_axis = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lax_oleinik_bruteforce(initial, hstar, Point{0.3}, 1.5, cfg, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_f1_slice)->ArgsProduct({{101, 301}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_f2_slice)->ArgsProduct({{101, 301}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_scan)->ArgsProduct({{40001, 400001}, {0, 1}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
