#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hjnn {

/// A real number or +infinity.
///
/// Functions in the catalog map into R u {+inf}; -inf and NaN are not
/// representable and construction from either throws. Arithmetic saturates
/// at +inf, and scaling uses the convex-analysis convention 0 * (+inf) = 0.
class ExtendedScalar {
 public:
  constexpr ExtendedScalar() = default;

  // Implicit on purpose: every finite double is a valid extended scalar.
  ExtendedScalar(double v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if (!(v == v) || v == std::numeric_limits<double>::infinity() ||
        v == -std::numeric_limits<double>::infinity()) {
      throw std::domain_error("ExtendedScalar: value must be finite (use ExtendedScalar::infinity())");
    }
  }

  static constexpr ExtendedScalar infinity() {
    ExtendedScalar s;
    s.infinite_ = true;
    return s;
  }

  /// Lossless conversion from a double where +inf is the marker; NaN and -inf throw.
  static ExtendedScalar from_double(double v) {
    if (v == std::numeric_limits<double>::infinity()) return infinity();
    return ExtendedScalar(v);
  }

  [[nodiscard]] constexpr bool is_finite() const { return !infinite_; }
  [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }

  /// The finite value; throws when infinite.
  [[nodiscard]] double value() const {
    if (infinite_) throw std::domain_error("ExtendedScalar: value() called on +inf");
    return value_;
  }

  /// +inf maps to the IEEE infinity. Only for printing and reductions.
  [[nodiscard]] constexpr double to_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend ExtendedScalar operator+(ExtendedScalar a, ExtendedScalar b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedScalar(a.value_ + b.value_);
  }
  friend ExtendedScalar operator-(ExtendedScalar a, double b) { return a + ExtendedScalar(-b); }

  /// Scaling by a nonnegative factor; 0 * (+inf) = 0.
  friend ExtendedScalar operator*(double s, ExtendedScalar a) {
    if (s < 0.0) throw std::domain_error("ExtendedScalar: negative scale factor");
    if (a.infinite_) return s == 0.0 ? ExtendedScalar(0.0) : infinity();
    return ExtendedScalar(s * a.value_);
  }

  ExtendedScalar& operator+=(ExtendedScalar other) { return *this = *this + other; }

  friend constexpr bool operator==(ExtendedScalar a, ExtendedScalar b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtendedScalar a, ExtendedScalar b) {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtendedScalar s) {
    if (s.infinite_) return os << "inf";
    return os << s.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline ExtendedScalar min(ExtendedScalar a, ExtendedScalar b) { return b < a ? b : a; }
inline ExtendedScalar max(ExtendedScalar a, ExtendedScalar b) { return a < b ? b : a; }

inline const ExtendedScalar kInfinity = ExtendedScalar::infinity();

}  // namespace hjnn
