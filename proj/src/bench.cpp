#include "hjnn/bench.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace hjnn {
namespace {

constexpr std::size_t kPointsPerRep = 1000;

std::vector<Point> random_points(std::mt19937_64& rng, std::size_t count, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = dist(rng);
    pts.push_back(std::move(p));
  }
  return pts;
}

template <class Eval>
double time_evals(const std::vector<Point>& pts, std::size_t reps, const Eval& eval) {
  volatile double sink = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r) {
    for (const auto& x : pts) sink = sink + eval(x);
  }
  const auto stop = std::chrono::steady_clock::now();
  (void)sink;
  return std::chrono::duration<double>(stop - start).count() / static_cast<double>(reps * pts.size());
}

}  // namespace

std::vector<BenchRow> run_bench(Architecture arch, std::span<const std::size_t> dims, std::size_t m,
                                std::size_t reps, std::uint64_t seed) {
  if (dims.empty()) throw std::invalid_argument("bench: dims must not be empty");
  if (reps == 0) throw std::invalid_argument("bench: reps must be >= 1");
  if (arch == Architecture::arch1 && m == 0) throw std::invalid_argument("bench: m must be >= 1");

  std::vector<BenchRow> rows;
  for (std::size_t n : dims) {
    if (n == 0) throw std::invalid_argument("bench: dimensions must be >= 1");
    std::mt19937_64 rng(seed + n);
    const auto pts = random_points(rng, kPointsPerRep, n);
    const double t = 1.0;

    if (arch == Architecture::arch1) {
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      std::vector<LagrangianBranch> branches;
      const auto anchors = random_points(rng, m, n);
      for (const auto& u : anchors) branches.push_back({u, dist(rng)});
      const LagrangianNet net(ConvexFn::shifted_norm_plus(), std::move(branches));
      rows.push_back({n, m, time_evals(pts, reps, [&](const Point& x) { return f1_eval(net, x, t).value; })});
    } else {
      const InitialDataNet net(ConcaveFn(ConvexFn::half_squared_norm()),
                               build_norm_hamiltonian(NormHamiltonian::linf, n));
      rows.push_back({n, net.size(),
                      time_evals(pts, reps, [&](const Point& x) { return f2_eval(net, x, t).value; })});
    }
  }
  return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
  std::string out = "n,m,mean_eval_seconds\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6g", r.mean_eval_seconds);
    out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + buf + "\n";
  }
  return out;
}

}  // namespace hjnn
