#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "hjnn/convex_fn.hpp"
#include "hjnn/simplex_lp.hpp"

namespace hjnn {

/// Witness that pair k lies strictly above the lower convex envelope of the
/// pair set: sum_j alpha_j v_j = v_k and sum_j alpha_j b_j < b_k - tol.
struct HViolation {
  std::size_t index;  // 0-based
  SimplexWeights alpha;
  double envelope_value;
};

/// Outcome of checking that some convex l interpolates l(v_i) = b_i.
struct HCertificate {
  static constexpr double kTolerance = 1e-9;

  std::optional<HViolation> violation;

  [[nodiscard]] bool holds() const { return !violation.has_value(); }
};

/// Each (v_k, b_k) must attain the LP min { sum alpha_j b_j : alpha in the simplex,
/// sum alpha_j v_j = v_k }; for finitely many pairs this is equivalent to the
/// existence of a convex interpolant. Reports the first violating index.
HCertificate check_assumption_h(std::span<const AffineRow> points);

class AssumptionHViolated : public std::invalid_argument {
 public:
  explicit AssumptionHViolated(HViolation violation);
  [[nodiscard]] const HViolation& violation() const { return violation_; }

 private:
  HViolation violation_;
};

}  // namespace hjnn
