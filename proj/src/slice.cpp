#include "hjnn/slice.hpp"

#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>

namespace hjnn {
namespace {

template <class Eval>
std::vector<SliceRow> run_slice(const SliceSpec& spec, std::size_t dim, const Eval& eval, Execution exec) {
  spec.validate(dim);
  const std::size_t grid = spec.grid_size();
  const std::size_t nt = spec.times.size();
  std::vector<SliceRow> rows(grid * nt);

  auto fill = [&](std::size_t g) {
    const Point x = spec.grid_point(g, dim);
    for (std::size_t k = 0; k < nt; ++k) {
      SliceRow& row = rows[g * nt + k];
      for (std::size_t a = 0; a < spec.free_axes.size(); ++a) row.coords[a] = x[spec.free_axes[a]];
      row.t = spec.times[k];
      row.result = eval(x, row.t);
    }
  };

  if (exec == Execution::serial) {
    for (std::size_t g = 0; g < grid; ++g) fill(g);
    return rows;
  }

  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(grid);
#pragma omp parallel for schedule(static)
  for (std::int64_t g = 0; g < count; ++g) {
    try {
      fill(static_cast<std::size_t>(g));
    } catch (...) {
#pragma omp critical(hjnn_slice_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace

void SliceSpec::validate(std::size_t dim) const {
  if (free_axes.empty() || free_axes.size() > 2) {
    throw std::invalid_argument("slice: axes must name one or two coordinates");
  }
  if (ranges.size() != free_axes.size()) {
    throw std::invalid_argument("slice: range count (" + std::to_string(ranges.size()) +
                                ") must match axis count (" + std::to_string(free_axes.size()) + ")");
  }
  for (std::size_t a : free_axes) {
    if (a >= dim) {
      throw std::invalid_argument("slice: axis " + std::to_string(a + 1) + " exceeds dimension " +
                                  std::to_string(dim));
    }
  }
  if (free_axes.size() == 2 && free_axes[0] == free_axes[1]) {
    throw std::invalid_argument("slice: axes must be distinct");
  }
  for (const auto& r : ranges) {
    // A single step is a pinned coordinate and needs min == max.
    if (r.steps == 0) throw std::invalid_argument("slice: range steps must be >= 1");
    if (r.steps == 1 && r.min != r.max) throw std::invalid_argument("slice: a 1-step range needs min == max");
    if (r.steps >= 2 && !(r.min < r.max)) throw std::invalid_argument("slice: range min must be below max");
  }
  if (!fixed_coords.empty() && fixed_coords.size() != dim) {
    throw std::invalid_argument("slice: fixed has " + std::to_string(fixed_coords.size()) +
                                " coordinates, expected " + std::to_string(dim));
  }
  if (times.empty()) throw std::invalid_argument("slice: times must not be empty");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0)) throw std::invalid_argument("slice: times must be >= 0");
    if (k > 0 && !(times[k - 1] < times[k])) throw std::invalid_argument("slice: times must be strictly ascending");
  }
}

std::size_t SliceSpec::grid_size() const {
  std::size_t g = 1;
  for (const auto& r : ranges) g *= r.steps;
  return g;
}

double SliceSpec::axis_value(std::size_t axis, std::size_t k) const {
  const auto& r = ranges[axis];
  if (k + 1 == r.steps) return r.max;
  return r.min + (r.max - r.min) * static_cast<double>(k) / static_cast<double>(r.steps - 1);
}

Point SliceSpec::grid_point(std::size_t g, std::size_t dim) const {
  Point x = fixed_coords.empty() ? Point(dim, 0.0) : Point(fixed_coords);
  for (std::size_t a = free_axes.size(); a-- > 0;) {
    const std::size_t steps = ranges[a].steps;
    x[free_axes[a]] = axis_value(a, g % steps);
    g /= steps;
  }
  return x;
}

std::vector<SliceRow> f1_slice(const LagrangianNet& net, const SliceSpec& spec, Execution exec) {
  return run_slice(
      spec, net.dim(),
      [&](const Point& x, double t) { return t == 0.0 ? f1_initial(net, x) : f1_eval(net, x, t); }, exec);
}

std::vector<SliceRow> f2_slice(const InitialDataNet& net, const SliceSpec& spec, Execution exec) {
  return run_slice(spec, net.dim(), [&](const Point& x, double t) { return f2_eval(net, x, t); }, exec);
}

}  // namespace hjnn
