#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hjnn/extended_scalar.hpp"
#include "hjnn/point.hpp"

namespace hjnn {

enum class NormKind { l1, l2, linf };

/// Dual norm: l1 <-> linf, l2 <-> l2.
NormKind dual(NormKind kind);
double norm(NormKind kind, std::span<const double> x);
std::string to_string(NormKind kind);

/// One affine piece x -> <x, v> - b.
struct AffineRow {
  Point v;
  double b = 0.0;
  friend bool operator==(const AffineRow&, const AffineRow&) = default;
};

namespace catalog {

/// -x - 1/2 for x < -1, x^2/2 on [-1, 2], 2x - 2 for x > 2.
struct ClippedQuadratic1D {
  friend bool operator==(const ClippedQuadratic1D&, const ClippedQuadratic1D&) = default;
};
struct PNorm {
  NormKind kind = NormKind::l2;
  friend bool operator==(const PNorm&, const PNorm&) = default;
};
/// max(||x||_2 - 1, 0)
struct ShiftedNormPlus {
  friend bool operator==(const ShiftedNormPlus&, const ShiftedNormPlus&) = default;
};
/// ||x||_2^2 / 2
struct HalfSquaredNorm {
  friend bool operator==(const HalfSquaredNorm&, const HalfSquaredNorm&) = default;
};
/// max_i { <x, v_i> - b_i }
struct MaxAffine {
  std::vector<AffineRow> rows;
  friend bool operator==(const MaxAffine&, const MaxAffine&) = default;
};
/// p^2/2 on [-1, 2], +inf elsewhere. Conjugate of ClippedQuadratic1D.
struct IndicatorConjugateQuadratic1D {
  friend bool operator==(const IndicatorConjugateQuadratic1D&,
                         const IndicatorConjugateQuadratic1D&) = default;
};
/// ||p||_2 on the closed unit ball, +inf outside. Conjugate of ShiftedNormPlus.
struct NormOnUnitBall {
  friend bool operator==(const NormOnUnitBall&, const NormOnUnitBall&) = default;
};
/// 0 on the closed unit ball of the given norm, +inf outside.
struct BallIndicator {
  NormKind kind = NormKind::l2;
  friend bool operator==(const BallIndicator&, const BallIndicator&) = default;
};

}  // namespace catalog

/// A closed-form member of Gamma_0(R^n).
class ConvexFn {
 public:
  using Variant = std::variant<catalog::ClippedQuadratic1D, catalog::PNorm, catalog::ShiftedNormPlus,
                               catalog::HalfSquaredNorm, catalog::MaxAffine,
                               catalog::IndicatorConjugateQuadratic1D, catalog::NormOnUnitBall,
                               catalog::BallIndicator>;

  static ConvexFn clipped_quadratic_1d() { return ConvexFn(catalog::ClippedQuadratic1D{}); }
  static ConvexFn pnorm(NormKind kind) { return ConvexFn(catalog::PNorm{kind}); }
  static ConvexFn shifted_norm_plus() { return ConvexFn(catalog::ShiftedNormPlus{}); }
  static ConvexFn half_squared_norm() { return ConvexFn(catalog::HalfSquaredNorm{}); }
  /// Throws std::invalid_argument on an empty row list or mixed dimensions.
  static ConvexFn max_affine(std::vector<AffineRow> rows);
  static ConvexFn indicator_conjugate_quadratic_1d() {
    return ConvexFn(catalog::IndicatorConjugateQuadratic1D{});
  }
  static ConvexFn norm_on_unit_ball() { return ConvexFn(catalog::NormOnUnitBall{}); }
  static ConvexFn ball_indicator(NormKind kind) { return ConvexFn(catalog::BallIndicator{kind}); }

  /// Evaluates at x; throws DimensionError when x does not fit the variant.
  [[nodiscard]] ExtendedScalar operator()(std::span<const double> x) const;

  /// Evaluation for finite_everywhere variants without the extended wrapper.
  [[nodiscard]] double eval_finite(std::span<const double> x) const;

  [[nodiscard]] bool finite_everywhere() const;
  /// Globally Lipschitz (the Lagrangians accepted by architecture 1).
  [[nodiscard]] bool lipschitz() const;
  /// Fixed dimension of the variant, or nullopt when it accepts any n >= 1.
  [[nodiscard]] std::optional<std::size_t> dimension() const;
  [[nodiscard]] std::string name() const;

  [[nodiscard]] const Variant& variant() const { return fn_; }

  friend bool operator==(const ConvexFn&, const ConvexFn&) = default;

 private:
  explicit ConvexFn(Variant fn) : fn_(std::move(fn)) {}
  void check_dim(std::size_t n) const;

  Variant fn_;
};

ExtendedScalar eval_fn(const ConvexFn& f, const Point& x);

/// Closed-form Fenchel conjugate when the catalog has one; nullopt otherwise
/// (MaxAffine conjugates go through the simplex LP instead).
std::optional<ConvexFn> conjugate_analytic(const ConvexFn& f);

/// Analytic asymptotic (recession) function f'_inf(d).
ExtendedScalar asymptotic_fn(const ConvexFn& f, const Point& d);

/// Distance from w to the set where f fails to be differentiable
/// (a lower bound for MaxAffine). +inf when f is smooth everywhere.
double kink_distance(const ConvexFn& f, std::span<const double> w);

/// For variants with a bounded domain: when p lies outside dom f but within
/// `tol` of it, returns the nearest domain point; otherwise returns p.
/// Absorbs round-off in finite-difference gradients that land on dom f's boundary.
Point snap_to_domain(const ConvexFn& f, const Point& p, double tol);

/// g(x) = -negated(x) with negated finite everywhere, so g is real-valued concave.
class ConcaveFn {
 public:
  /// Throws std::invalid_argument when `negated` can take +inf.
  explicit ConcaveFn(ConvexFn negated);

  [[nodiscard]] double operator()(std::span<const double> x) const { return -negated_.eval_finite(x); }
  [[nodiscard]] const ConvexFn& negated() const { return negated_; }
  /// Uniformly Lipschitz concave data (the uniqueness refinement for architecture 2).
  [[nodiscard]] bool lipschitz() const { return negated_.lipschitz(); }

  friend bool operator==(const ConcaveFn&, const ConcaveFn&) = default;

 private:
  ConvexFn negated_;
};

}  // namespace hjnn
