#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hjnn/arch_one.hpp"
#include "hjnn/arch_two.hpp"
#include "hjnn/grid.hpp"
#include "hjnn/slice.hpp"
#include "hjnn/transforms.hpp"

namespace hjnn {

struct OracleConfig {
  double search_box_halfwidth = 20.0;
  std::size_t pts_per_axis = 40001;  // odd, so the grid contains its center
  double fd_step = 1e-4;

  /// Throws std::invalid_argument on a nonpositive box or step, or an even / too small point count.
  void validate() const;
};

using RealPointFn = std::function<double(std::span<const double>)>;
using SolutionFn = std::function<double(const Point&, double)>;

/// min over the u-grid centered at x of J(u) + t H*((x - u) / t), skipping
/// +inf terms. An upper bound on the Lax-Oleinik value. Requires t > 0 and
/// n <= 3; throws std::domain_error when every term is +inf.
double lax_oleinik_bruteforce(const RealPointFn& initial, const PointFn& hstar, const Point& x, double t,
                              const OracleConfig& cfg, Execution exec = Execution::parallel);

/// Velocity form: min over the v-grid of J(x - t v) + t H*(v) with H*
/// tabulated on the grid (`hstar_on_grid[k]` at grid point k). Allows t >= 0.
double lax_oleinik_bruteforce_v(const RealPointFn& initial, const UniformGrid& v_grid,
                                std::span<const ExtendedScalar> hstar_on_grid, const Point& x, double t,
                                Execution exec = Execution::parallel);

/// Evaluates H* at every point of the grid.
std::vector<ExtendedScalar> tabulate(const PointFn& hstar, const UniformGrid& grid);

struct Gradient {
  double dt = 0.0;
  Point dx;
};

/// Central differences in t and each coordinate of x. Requires h > 0 and t - h > 0.
Gradient gradient_fd(const SolutionFn& s, const Point& x, double t, double h);

/// |dS/dt + H(grad_x S)| from gradient_fd; +inf when H is +inf at the gradient.
ExtendedScalar hj_residual(const SolutionFn& s, const PointFn& hamiltonian, const Point& x, double t, double h);

// Residual screening: the PDE holds classically only where the solution is smooth.
inline constexpr double kScreenGap = 0.1;
inline constexpr double kScreenKinkDistance = 0.05;
/// Finite-difference gradients that land within this distance outside dom H are snapped back.
inline constexpr double kDomainSnapTolerance = 1e-6;

inline constexpr double kOracleTolerance = 2e-3;
inline constexpr double kResidualTolerance = 1e-3;

/// Gap above kScreenGap and the active branch argument at least
/// kScreenKinkDistance away from the Lagrangian's nonsmooth set.
bool is_screened_smooth(const LagrangianNet& net, const Point& x, double t, const EvalResult& r);
bool is_screened_smooth(const InitialDataNet& net, const Point& x, double t, const EvalResult& r);

/// H = L* with domain snapping. Throws std::invalid_argument when L has no closed-form conjugate.
PointFn residual_hamiltonian(const LagrangianNet& net);
PointFn residual_hamiltonian(const InitialDataNet& net);

struct ScreenedResiduals {
  std::vector<Point> xs;
  std::vector<double> ts;
  std::vector<ExtendedScalar> residuals;
  std::size_t attempts = 0;
};

/// Draws (x, t) in [-4, 4]^n x [0.1, 3] from a seeded generator until `count`
/// screened points are found (at most 100 * count draws) and records their residuals.
ScreenedResiduals sample_screened_residuals(const LagrangianNet& net, std::size_t count, std::uint64_t seed,
                                            double h);
ScreenedResiduals sample_screened_residuals(const InitialDataNet& net, std::size_t count, std::uint64_t seed,
                                            double h);

struct SampleRecord {
  std::size_t index = 0;
  Point x;
  double t = 0.0;
  double value = 0.0;
  std::optional<double> oracle;
  std::optional<double> oracle_gap;
  bool screened = false;
  std::optional<ExtendedScalar> residual;
};

struct VerifyOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  OracleConfig cfg;
  bool residual_only = false;
};

struct VerifyReport {
  std::string architecture;
  std::size_t dimension = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool oracle_checked = false;
  double oracle_tolerance = kOracleTolerance;
  double max_oracle_gap = 0.0;
  double mean_oracle_gap = 0.0;

  bool residual_checked = false;
  double residual_tolerance = kResidualTolerance;
  std::size_t screened = 0;
  double max_residual = 0.0;  // over screened samples
  double mean_residual = 0.0;
  double max_unscreened_residual = 0.0;

  bool pass = true;
  std::vector<SampleRecord> records;  // sorted by index

  [[nodiscard]] std::string to_text() const;
  /// One `metric=value` per line.
  [[nodiscard]] std::string to_key_values() const;
};

/// Seeded verification: x in [-4, 4]^n, t in [0.1, 3] (architecture 1) or [0, 3]
/// (architecture 2). Compares against the brute-force oracle when n <= 3 and
/// checks PDE residuals at screened points. Throws OracleRefusal for n > 3
/// unless residual_only is set.
VerifyReport verify_report(const LagrangianNet& net, const VerifyOptions& opts);
VerifyReport verify_report(const InitialDataNet& net, const VerifyOptions& opts);

/// The velocity grid used for architecture 2: the bounding cube of {v_i}
/// at spacing 1e-3 (coarsened so the grid stays below 4e6 points).
UniformGrid velocity_grid(const InitialDataNet& net);

/// Default u-grid for architecture 1 in dimension n: box 20, spacing 1e-3 in 1D,
/// coarser above; `oracle_tolerance_for` scales the 2e-3 tolerance with the spacing.
OracleConfig default_oracle_config(std::size_t n);
double oracle_tolerance_for(const OracleConfig& cfg);

}  // namespace hjnn
