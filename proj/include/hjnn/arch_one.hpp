#pragma once

#include <span>
#include <vector>

#include "hjnn/convex_fn.hpp"
#include "hjnn/eval_result.hpp"

namespace hjnn {

/// One branch t L((x - u) / t) + a.
struct LagrangianBranch {
  Point u;
  double a = 0.0;
  friend bool operator==(const LagrangianBranch&, const LagrangianBranch&) = default;
};

/// f1(x, t) = min_i { t L((x - u_i) / t) + a_i } with a convex, globally
/// Lipschitz Lagrangian L. Solves the HJ equation with H = L* and initial data
/// min_i { L'_inf(x - u_i) + a_i }.
class LagrangianNet {
 public:
  /// Throws std::invalid_argument for an empty branch list or a non-Lipschitz L,
  /// DimensionError for inconsistent dimensions.
  LagrangianNet(ConvexFn lagrangian, std::vector<LagrangianBranch> branches);

  [[nodiscard]] const ConvexFn& lagrangian() const { return lagrangian_; }
  [[nodiscard]] std::span<const LagrangianBranch> branches() const { return branches_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return branches_.size(); }

 private:
  ConvexFn lagrangian_;
  std::vector<LagrangianBranch> branches_;
  std::size_t dim_;
};

/// Requires t > 0; the formula has no meaning at t = 0 (use f1_initial).
EvalResult f1_eval(const LagrangianNet& net, const Point& x, double t);

/// The t = 0 data min_i { L'_inf(x - u_i) + a_i }.
EvalResult f1_initial(const LagrangianNet& net, const Point& x);

/// H = L*, from the analytic conjugate. Throws std::invalid_argument when the
/// catalog has no closed form (MaxAffine); conjugate_numeric can still be used
/// to check values.
ConvexFn hamiltonian_of(const LagrangianNet& net);

}  // namespace hjnn
