#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hjnn/extended_scalar.hpp"
#include "hjnn/point.hpp"

namespace hjnn {

/// A point of the unit simplex: alpha_i in [0, 1], sum alpha_i = 1 (within 1e-12).
class SimplexWeights {
 public:
  /// Throws std::invalid_argument when the invariants fail.
  explicit SimplexWeights(std::vector<double> alpha);

  [[nodiscard]] std::size_t size() const { return alpha_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return alpha_[i]; }
  [[nodiscard]] std::span<const double> span() const { return alpha_; }

 private:
  std::vector<double> alpha_;
};

struct SimplexLpResult {
  ExtendedScalar value;                  // +inf when target is outside co{v_i}
  std::optional<SimplexWeights> alpha;   // minimizer, absent when infeasible
};

/// min { sum_i alpha_i costs_i : alpha in the unit simplex, sum_i alpha_i vs_i = target }
///
/// Dense two-phase simplex with Bland's rule; pivot tolerance 1e-10. Sized for
/// a few dozen columns and n + 1 equality rows.
SimplexLpResult solve_simplex_lp(std::span<const double> costs, std::span<const Point> vs,
                                 const Point& target);

}  // namespace hjnn
