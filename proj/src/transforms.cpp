#include "hjnn/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hjnn {

double conjugate_numeric(const ConvexFn& f, const Point& p, double box_halfwidth,
                         std::size_t pts_per_axis) {
  if (!f.finite_everywhere()) {
    throw std::invalid_argument("conjugate_numeric: " + f.name() + " is not finite everywhere");
  }
  if (auto n = f.dimension(); n) require_same_dim(*n, p.size(), "conjugate_numeric");
  const UniformGrid grid(Point(p.size(), 0.0), box_halfwidth, pts_per_axis);

  std::vector<double> x(p.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < grid.size(); ++k) {
    grid.point(k, x);
    best = std::max(best, dot(p.span(), x) - f.eval_finite(x));
  }
  return best;
}

ExtendedScalar inf_convolution_numeric(const PointFn& f, const PointFn& g, const Point& x,
                                       double box_halfwidth, std::size_t pts_per_axis) {
  const UniformGrid grid(x, box_halfwidth, pts_per_axis);
  std::vector<double> u(x.size());
  std::vector<double> rest(x.size());
  ExtendedScalar best = kInfinity;
  for (std::uint64_t k = 0; k < grid.size(); ++k) {
    grid.point(k, u);
    for (std::size_t i = 0; i < x.size(); ++i) rest[i] = x[i] - u[i];
    best = min(best, f(u) + g(rest));
  }
  return best;
}

ExtendedScalar asymptotic_numeric(const ConvexFn& f, const Point& d) {
  const Point origin(d.size(), 0.0);
  const ExtendedScalar f0 = eval_fn(f, origin);
  if (f0.is_infinite()) throw std::invalid_argument("asymptotic_numeric: 0 must lie in dom f");

  constexpr double kInfiniteSlope = 1e12;
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> sd(d.size());
  for (int k = 0; k <= 30; ++k) {
    const double s = std::ldexp(1.0, k);
    for (std::size_t i = 0; i < d.size(); ++i) sd[i] = s * d[i];
    const ExtendedScalar fs = f(sd);
    if (fs.is_infinite()) return kInfinity;
    const double q = (fs.value() - f0.value()) / s;
    if (q > kInfiniteSlope) return kInfinity;
    best = std::max(best, q);
  }
  return best;
}

}  // namespace hjnn
