#include "hjnn/convex_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hjnn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_zero(std::span<const double> d) {
  return std::all_of(d.begin(), d.end(), [](double c) { return c == 0.0; });
}

double clipped_quadratic(double x) {
  if (x < -1.0) return -x - 0.5;
  if (x <= 2.0) return 0.5 * x * x;
  return 2.0 * x - 2.0;
}

}  // namespace

NormKind dual(NormKind kind) {
  switch (kind) {
    case NormKind::l1: return NormKind::linf;
    case NormKind::l2: return NormKind::l2;
    case NormKind::linf: return NormKind::l1;
  }
  return NormKind::l2;
}

double norm(NormKind kind, std::span<const double> x) {
  switch (kind) {
    case NormKind::l1: return norm1(x);
    case NormKind::l2: return norm2(x);
    case NormKind::linf: return norm_inf(x);
  }
  return 0.0;
}

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::l1: return "1";
    case NormKind::l2: return "2";
    case NormKind::linf: return "inf";
  }
  return "?";
}

ConvexFn ConvexFn::max_affine(std::vector<AffineRow> rows) {
  if (rows.empty()) throw std::invalid_argument("max_affine: at least one row is required");
  const std::size_t n = rows.front().v.size();
  if (n == 0) throw std::invalid_argument("max_affine: rows must have dimension >= 1");
  for (const auto& r : rows) {
    if (r.v.size() != n) throw DimensionError("max_affine: rows of unequal dimension");
    if (!std::isfinite(r.b)) throw std::domain_error("max_affine: offsets must be finite");
  }
  return ConvexFn(catalog::MaxAffine{std::move(rows)});
}

std::optional<std::size_t> ConvexFn::dimension() const {
  return std::visit(
      Overloaded{
          [](const catalog::ClippedQuadratic1D&) -> std::optional<std::size_t> { return 1; },
          [](const catalog::IndicatorConjugateQuadratic1D&) -> std::optional<std::size_t> { return 1; },
          [](const catalog::MaxAffine& f) -> std::optional<std::size_t> { return f.rows.front().v.size(); },
          [](const auto&) -> std::optional<std::size_t> { return std::nullopt; },
      },
      fn_);
}

void ConvexFn::check_dim(std::size_t n) const {
  if (n == 0) throw DimensionError(name() + ": empty argument");
  if (auto d = dimension(); d && *d != n) {
    throw DimensionError(name() + ": expected dimension " + std::to_string(*d) + ", got " +
                         std::to_string(n));
  }
}

ExtendedScalar ConvexFn::operator()(std::span<const double> x) const {
  check_dim(x.size());
  return std::visit(
      Overloaded{
          [&](const catalog::ClippedQuadratic1D&) -> ExtendedScalar { return clipped_quadratic(x[0]); },
          [&](const catalog::PNorm& f) -> ExtendedScalar { return norm(f.kind, x); },
          [&](const catalog::ShiftedNormPlus&) -> ExtendedScalar { return std::max(norm2(x) - 1.0, 0.0); },
          [&](const catalog::HalfSquaredNorm&) -> ExtendedScalar { return 0.5 * dot(x, x); },
          [&](const catalog::MaxAffine& f) -> ExtendedScalar {
            double best = -kInf;
            for (const auto& r : f.rows) best = std::max(best, dot(x, r.v.span()) - r.b);
            return best;
          },
          [&](const catalog::IndicatorConjugateQuadratic1D&) -> ExtendedScalar {
            const double p = x[0];
            if (p < -1.0 || p > 2.0) return kInfinity;
            return 0.5 * p * p;
          },
          [&](const catalog::NormOnUnitBall&) -> ExtendedScalar {
            const double r = norm2(x);
            if (r > 1.0) return kInfinity;
            return r;
          },
          [&](const catalog::BallIndicator& f) -> ExtendedScalar {
            if (norm(f.kind, x) > 1.0) return kInfinity;
            return 0.0;
          },
      },
      fn_);
}

double ConvexFn::eval_finite(std::span<const double> x) const {
  return (*this)(x).value();
}

bool ConvexFn::finite_everywhere() const {
  return std::visit(
      Overloaded{
          [](const catalog::IndicatorConjugateQuadratic1D&) { return false; },
          [](const catalog::NormOnUnitBall&) { return false; },
          [](const catalog::BallIndicator&) { return false; },
          [](const auto&) { return true; },
      },
      fn_);
}

bool ConvexFn::lipschitz() const {
  return std::visit(
      Overloaded{
          [](const catalog::ClippedQuadratic1D&) { return true; },
          [](const catalog::PNorm&) { return true; },
          [](const catalog::ShiftedNormPlus&) { return true; },
          [](const catalog::MaxAffine&) { return true; },
          [](const auto&) { return false; },
      },
      fn_);
}

std::string ConvexFn::name() const {
  return std::visit(
      Overloaded{
          [](const catalog::ClippedQuadratic1D&) -> std::string { return "clipped_quadratic_1d"; },
          [](const catalog::PNorm& f) -> std::string { return "pnorm(" + to_string(f.kind) + ")"; },
          [](const catalog::ShiftedNormPlus&) -> std::string { return "shifted_norm_plus"; },
          [](const catalog::HalfSquaredNorm&) -> std::string { return "half_squared_norm"; },
          [](const catalog::MaxAffine& f) -> std::string {
            return "max_affine(" + std::to_string(f.rows.size()) + " rows)";
          },
          [](const catalog::IndicatorConjugateQuadratic1D&) -> std::string {
            return "indicator_conjugate_quadratic_1d";
          },
          [](const catalog::NormOnUnitBall&) -> std::string { return "norm_on_unit_ball"; },
          [](const catalog::BallIndicator& f) -> std::string {
            return "ball_indicator(" + to_string(f.kind) + ")";
          },
      },
      fn_);
}

ExtendedScalar eval_fn(const ConvexFn& f, const Point& x) { return f(x.span()); }

std::optional<ConvexFn> conjugate_analytic(const ConvexFn& f) {
  return std::visit(
      Overloaded{
          [](const catalog::ClippedQuadratic1D&) -> std::optional<ConvexFn> {
            return ConvexFn::indicator_conjugate_quadratic_1d();
          },
          [](const catalog::IndicatorConjugateQuadratic1D&) -> std::optional<ConvexFn> {
            return ConvexFn::clipped_quadratic_1d();
          },
          [](const catalog::ShiftedNormPlus&) -> std::optional<ConvexFn> {
            return ConvexFn::norm_on_unit_ball();
          },
          [](const catalog::NormOnUnitBall&) -> std::optional<ConvexFn> {
            return ConvexFn::shifted_norm_plus();
          },
          [](const catalog::HalfSquaredNorm&) -> std::optional<ConvexFn> {
            return ConvexFn::half_squared_norm();
          },
          [](const catalog::PNorm& g) -> std::optional<ConvexFn> {
            return ConvexFn::ball_indicator(dual(g.kind));
          },
          [](const catalog::BallIndicator& g) -> std::optional<ConvexFn> {
            return ConvexFn::pnorm(dual(g.kind));
          },
          [](const catalog::MaxAffine&) -> std::optional<ConvexFn> { return std::nullopt; },
      },
      f.variant());
}

ExtendedScalar asymptotic_fn(const ConvexFn& f, const Point& d) {
  if (auto n = f.dimension(); n) require_same_dim(*n, d.size(), "asymptotic_fn");
  const auto ds = d.span();
  return std::visit(
      Overloaded{
          [&](const catalog::ClippedQuadratic1D&) -> ExtendedScalar {
            return ds[0] < 0.0 ? -ds[0] : 2.0 * ds[0];
          },
          [&](const catalog::PNorm& g) -> ExtendedScalar { return norm(g.kind, ds); },
          [&](const catalog::ShiftedNormPlus&) -> ExtendedScalar { return norm2(ds); },
          [&](const catalog::MaxAffine& g) -> ExtendedScalar {
            double best = -kInf;
            for (const auto& r : g.rows) best = std::max(best, dot(ds, r.v.span()));
            return best;
          },
          // Superlinear growth or bounded domain: 0 at d = 0, +inf elsewhere.
          [&](const auto&) -> ExtendedScalar { return is_zero(ds) ? ExtendedScalar(0.0) : kInfinity; },
      },
      f.variant());
}

double kink_distance(const ConvexFn& f, std::span<const double> w) {
  return std::visit(
      Overloaded{
          [&](const catalog::ClippedQuadratic1D&) {
            return std::min(std::abs(w[0] + 1.0), std::abs(w[0] - 2.0));
          },
          [&](const catalog::IndicatorConjugateQuadratic1D&) {
            return std::min(std::abs(w[0] + 1.0), std::abs(w[0] - 2.0));
          },
          [&](const catalog::PNorm& g) {
            switch (g.kind) {
              case NormKind::l2: return norm2(w);
              case NormKind::l1: {
                double d = kInf;
                for (double c : w) d = std::min(d, std::abs(c));
                return d;
              }
              case NormKind::linf: {
                double a1 = 0.0, a2 = 0.0;
                for (double c : w) {
                  const double a = std::abs(c);
                  if (a > a1) {
                    a2 = a1;
                    a1 = a;
                  } else if (a > a2) {
                    a2 = a;
                  }
                }
                return w.size() == 1 ? a1 : std::min(a1, 0.5 * (a1 - a2));
              }
            }
            return 0.0;
          },
          [&](const catalog::ShiftedNormPlus&) { return std::abs(norm2(w) - 1.0); },
          [&](const catalog::NormOnUnitBall&) {
            const double r = norm2(w);
            return std::min(r, std::abs(r - 1.0));
          },
          [&](const catalog::BallIndicator& g) { return std::abs(norm(g.kind, w) - 1.0); },
          [&](const catalog::HalfSquaredNorm&) { return kInf; },
          [&](const catalog::MaxAffine& g) {
            if (g.rows.size() == 1) return kInf;
            std::size_t top = 0;
            double best = -kInf;
            for (std::size_t i = 0; i < g.rows.size(); ++i) {
              const double v = dot(w, g.rows[i].v.span()) - g.rows[i].b;
              if (v > best) {
                best = v;
                top = i;
              }
            }
            // A competitor j overtakes the top row only after moving
            // (best - value_j) / ||v_top - v_j||.
            double dist = kInf;
            for (std::size_t j = 0; j < g.rows.size(); ++j) {
              if (j == top) continue;
              const Point diff = g.rows[top].v - g.rows[j].v;
              const double slope = norm2(diff.span());
              const double gap = best - (dot(w, g.rows[j].v.span()) - g.rows[j].b);
              if (slope == 0.0) {
                if (gap == 0.0) dist = 0.0;
                continue;
              }
              dist = std::min(dist, gap / slope);
            }
            return dist;
          },
      },
      f.variant());
}

Point snap_to_domain(const ConvexFn& f, const Point& p, double tol) {
  return std::visit(
      Overloaded{
          [&](const catalog::IndicatorConjugateQuadratic1D&) {
            const double c = p[0];
            if (c < -1.0 && c >= -1.0 - tol) return Point{-1.0};
            if (c > 2.0 && c <= 2.0 + tol) return Point{2.0};
            return p;
          },
          [&](const catalog::NormOnUnitBall&) {
            const double r = norm2(p.span());
            if (r > 1.0 && r <= 1.0 + tol) return (1.0 / r) * p;
            return p;
          },
          [&](const catalog::BallIndicator& g) {
            if (g.kind == NormKind::linf) {
              Point q = p;
              for (std::size_t i = 0; i < q.size(); ++i) {
                if (std::abs(q[i]) > 1.0 && std::abs(q[i]) <= 1.0 + tol) q[i] = std::copysign(1.0, q[i]);
              }
              return q;
            }
            const double r = norm(g.kind, p.span());
            if (r > 1.0 && r <= 1.0 + tol) return (1.0 / r) * p;
            return p;
          },
          [&](const auto&) { return p; },
      },
      f.variant());
}

ConcaveFn::ConcaveFn(ConvexFn negated) : negated_(std::move(negated)) {
  if (!negated_.finite_everywhere()) {
    throw std::invalid_argument("ConcaveFn: " + negated_.name() +
                                " is not finite everywhere; the concave function would take -inf");
  }
}

}  // namespace hjnn
