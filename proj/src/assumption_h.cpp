#include "hjnn/assumption_h.hpp"

#include <algorithm>
#include <vector>

namespace hjnn {

HCertificate check_assumption_h(std::span<const AffineRow> points) {
  if (points.empty()) throw std::invalid_argument("check_assumption_h: no points");
  const std::size_t n = points.front().v.size();
  for (const auto& p : points) require_same_dim(p.v.size(), n, "check_assumption_h");

  // Equal offsets are interpolated by a constant.
  const double b0 = points.front().b;
  if (std::all_of(points.begin(), points.end(), [&](const AffineRow& p) { return p.b == b0; })) {
    return {};
  }

  std::vector<double> costs;
  std::vector<Point> vs;
  costs.reserve(points.size());
  vs.reserve(points.size());
  for (const auto& p : points) {
    costs.push_back(p.b);
    vs.push_back(p.v);
  }

  for (std::size_t k = 0; k < points.size(); ++k) {
    auto lp = solve_simplex_lp(costs, vs, points[k].v);
    // v_k is always feasible (alpha = e_k), so the LP has an optimum.
    const double envelope = lp.value.value();
    if (envelope < points[k].b - HCertificate::kTolerance) {
      return {HViolation{k, std::move(*lp.alpha), envelope}};
    }
  }
  return {};
}

AssumptionHViolated::AssumptionHViolated(HViolation violation)
    : std::invalid_argument("assumption (H) violated at index " + std::to_string(violation.index + 1) +
                            ": pair lies above the lower convex envelope (envelope value " +
                            std::to_string(violation.envelope_value) + ")"),
      violation_(std::move(violation)) {}

}  // namespace hjnn
