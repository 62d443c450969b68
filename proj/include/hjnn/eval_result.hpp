#pragma once

#include <cstddef>
#include <limits>

#include "hjnn/extended_scalar.hpp"

namespace hjnn {

/// Value of a min-of-branches network at one point.
struct EvalResult {
  double value = 0.0;
  std::size_t argmin = 0;       // 0-based winning branch, smallest index on ties
  ExtendedScalar gap = kInfinity;  // runner-up minus winner; +inf with a single branch
};

/// Running minimum that also tracks the runner-up.
class BranchMin {
 public:
  void offer(double value, std::size_t index) {
    if (value < best_) {
      second_ = best_;
      best_ = value;
      argmin_ = index;
    } else if (value < second_) {
      second_ = value;
    }
  }

  [[nodiscard]] EvalResult result() const {
    EvalResult r;
    r.value = best_;
    r.argmin = argmin_;
    r.gap = second_ == std::numeric_limits<double>::infinity() ? kInfinity : ExtendedScalar(second_ - best_);
    return r;
  }

 private:
  double best_ = std::numeric_limits<double>::infinity();
  double second_ = std::numeric_limits<double>::infinity();
  std::size_t argmin_ = 0;
};

}  // namespace hjnn
