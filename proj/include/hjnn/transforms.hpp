#pragma once

#include <functional>

#include "hjnn/convex_fn.hpp"
#include "hjnn/grid.hpp"

namespace hjnn {

using PointFn = std::function<ExtendedScalar(std::span<const double>)>;

/// Grid lower bound on f*(p): max of <p, x> - f(x) over the uniform grid on
/// [-box, box]^n. Requires f finite everywhere and n <= 3.
double conjugate_numeric(const ConvexFn& f, const Point& p, double box_halfwidth,
                         std::size_t pts_per_axis);

/// Grid upper bound on (f box g)(x): min of f(u) + g(x - u) over u on the
/// uniform grid centered at x. Returns +inf when every term is +inf.
ExtendedScalar inf_convolution_numeric(const PointFn& f, const PointFn& g, const Point& x,
                                       double box_halfwidth, std::size_t pts_per_axis);

/// Recession function from difference quotients (f(s d) - f(0)) / s at
/// s = 2^0 ... 2^30; +inf once a quotient exceeds 1e12. The quotient is
/// nondecreasing in s, so the last sample is the best finite estimate.
ExtendedScalar asymptotic_numeric(const ConvexFn& f, const Point& d);

}  // namespace hjnn
