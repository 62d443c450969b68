#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "hjnn/point.hpp"

namespace hjnn {

/// Grid searches are desk-scale verification tools and refuse n > 3.
inline constexpr std::size_t kMaxGridDim = 3;

class OracleRefusal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// pts_per_axis equally spaced values per axis on [center - h, center + h]
/// (endpoints included), enumerated lexicographically with axis 0 slowest.
class UniformGrid {
 public:
  UniformGrid(Point center, double halfwidth, std::size_t pts_per_axis)
      : center_(std::move(center)), halfwidth_(halfwidth), pts_(pts_per_axis) {
    if (center_.size() == 0) throw std::invalid_argument("UniformGrid: empty center");
    if (center_.size() > kMaxGridDim) {
      throw OracleRefusal("grid search refused for dimension " + std::to_string(center_.size()) +
                          " > " + std::to_string(kMaxGridDim));
    }
    if (!(halfwidth_ > 0.0)) throw std::invalid_argument("UniformGrid: halfwidth must be positive");
    if (pts_ < 3) throw std::invalid_argument("UniformGrid: need at least 3 points per axis");
    size_ = 1;
    for (std::size_t i = 0; i < center_.size(); ++i) size_ *= pts_;
  }

  [[nodiscard]] std::size_t dim() const { return center_.size(); }
  [[nodiscard]] std::uint64_t size() const { return size_; }
  [[nodiscard]] double spacing() const { return 2.0 * halfwidth_ / static_cast<double>(pts_ - 1); }

  [[nodiscard]] double coordinate(std::size_t axis, std::size_t k) const {
    const auto last = static_cast<double>(pts_ - 1);
    // Symmetric formula so the center is hit exactly when pts_per_axis is odd.
    return center_[axis] + halfwidth_ * (2.0 * static_cast<double>(k) - last) / last;
  }

  void point(std::uint64_t index, std::span<double> out) const {
    for (std::size_t axis = dim(); axis-- > 0;) {
      out[axis] = coordinate(axis, static_cast<std::size_t>(index % pts_));
      index /= pts_;
    }
  }

 private:
  Point center_;
  double halfwidth_;
  std::size_t pts_;
  std::uint64_t size_ = 1;
};

}  // namespace hjnn
