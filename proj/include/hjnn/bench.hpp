#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hjnn/config.hpp"

namespace hjnn {

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double mean_eval_seconds = 0.0;
};

/// Mean single-point evaluation time per dimension over reps x 1000 points.
///
/// arch1 nets use max(||x|| - 1, 0) with m branches u_i, a_i drawn from the
/// seed in [-1, 1]; arch2 nets use J = -||x||^2 / 2 with the l-inf generator
/// (m = 2n, the `m` argument is ignored).
std::vector<BenchRow> run_bench(Architecture arch, std::span<const std::size_t> dims, std::size_t m,
                                std::size_t reps, std::uint64_t seed = 0);

/// `n,m,mean_eval_seconds` header plus one line per row.
std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace hjnn
