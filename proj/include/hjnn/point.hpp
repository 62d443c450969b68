#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hjnn {

/// Thrown when operands of different dimension meet.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of R^n with finite coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t n, double fill = 0.0) : coords_(n, fill) {}
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { check_finite(); }
  Point(std::initializer_list<double> coords) : coords_(coords) { check_finite(); }

  [[nodiscard]] std::size_t size() const { return coords_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  [[nodiscard]] std::span<const double> span() const { return coords_; }
  [[nodiscard]] std::span<double> span() { return coords_; }
  [[nodiscard]] const std::vector<double>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  void check_finite() const {
    for (double c : coords_) {
      if (!std::isfinite(c)) throw std::domain_error("Point: coordinates must be finite");
    }
  }

  std::vector<double> coords_;
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double norm1(std::span<const double> a) {
  double s = 0.0;
  for (double c : a) s += std::abs(c);
  return s;
}

inline double norm_inf(std::span<const double> a) {
  double s = 0.0;
  for (double c : a) s = std::max(s, std::abs(c));
  return s;
}

/// out = (a - b) * scale
inline void scaled_difference(std::span<const double> a, std::span<const double> b, double scale,
                              std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] - b[i]) * scale;
}

inline Point operator-(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "Point subtraction");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Point operator+(const Point& a, const Point& b) {
  require_same_dim(a.size(), b.size(), "Point addition");
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Point operator*(double s, const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

}  // namespace hjnn
