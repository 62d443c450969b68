#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hjnn/arch_one.hpp"
#include "hjnn/arch_two.hpp"

namespace hjnn {

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;
  friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/// A one- or two-dimensional slice through R^n: the free axes sweep their
/// ranges, every other coordinate stays at fixed_coords.
struct SliceSpec {
  std::vector<std::size_t> free_axes;  // 0-based, distinct, < dimension
  std::vector<AxisRange> ranges;       // one per free axis; steps >= 2, or 1 with min == max
  std::vector<double> fixed_coords;    // full-length base point; empty means the origin
  std::vector<double> times;           // ascending, >= 0

  /// Throws std::invalid_argument naming the offending field.
  void validate(std::size_t dim) const;

  [[nodiscard]] std::size_t grid_size() const;
  [[nodiscard]] double axis_value(std::size_t axis, std::size_t k) const;
  /// Lexicographic grid order, first free axis slowest.
  [[nodiscard]] Point grid_point(std::size_t g, std::size_t dim) const;

  friend bool operator==(const SliceSpec&, const SliceSpec&) = default;
};

struct SliceRow {
  std::array<double, 2> coords{};  // values of the free axes (second unused for 1D slices)
  double t = 0.0;
  EvalResult result;
};

enum class Execution { serial, parallel };

/// Rows ordered by grid point, then by t. t = 0 rows take the initial-data
/// formula. The parallel path fans grid points out over OpenMP threads and
/// produces the same rows as the serial reference.
std::vector<SliceRow> f1_slice(const LagrangianNet& net, const SliceSpec& spec,
                               Execution exec = Execution::parallel);

/// As f1_slice; t = 0 is evaluated directly.
std::vector<SliceRow> f2_slice(const InitialDataNet& net, const SliceSpec& spec,
                               Execution exec = Execution::parallel);

}  // namespace hjnn
