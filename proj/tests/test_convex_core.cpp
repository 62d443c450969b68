#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "hjnn/convex_fn.hpp"
#include "hjnn/transforms.hpp"

using namespace hjnn;
using fixtures::random_point;

namespace {

PointFn as_point_fn(const ConvexFn& f) {
  return [f](std::span<const double> x) { return f(x); };
}

PointFn asymptotic_as_point_fn(const ConvexFn& f) {
  return [f](std::span<const double> d) { return asymptotic_fn(f, Point(std::vector<double>(d.begin(), d.end()))); };
}

// Every finite-everywhere catalog variant usable in dimension n.
std::vector<ConvexFn> finite_catalog(std::size_t n, std::mt19937_64& rng) {
  std::vector<ConvexFn> fs{ConvexFn::pnorm(NormKind::l1), ConvexFn::pnorm(NormKind::l2),
                           ConvexFn::pnorm(NormKind::linf), ConvexFn::shifted_norm_plus(),
                           ConvexFn::half_squared_norm()};
  std::vector<AffineRow> rows;
  for (int i = 0; i < 3; ++i) rows.push_back({random_point(rng, n, -1, 1), fixtures::uniform(rng, -1, 1)});
  fs.push_back(ConvexFn::max_affine(rows));
  if (n == 1) fs.push_back(ConvexFn::clipped_quadratic_1d());
  return fs;
}

}  // namespace

TEST_CASE("extended scalar saturates at +inf") {
  const ExtendedScalar three = 3.0;
  CHECK((kInfinity + three).is_infinite());
  CHECK((three + kInfinity).is_infinite());
  CHECK(min(kInfinity, three) == three);
  CHECK(max(kInfinity, three).is_infinite());
  CHECK(three < kInfinity);
  CHECK((2.0 * kInfinity).is_infinite());
  CHECK((0.0 * kInfinity) == ExtendedScalar(0.0));
  CHECK((kInfinity - 5.0).is_infinite());
  CHECK_THROWS_AS(ExtendedScalar(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(ExtendedScalar(-std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS((void)kInfinity.value(), std::domain_error);
  CHECK(ExtendedScalar::from_double(std::numeric_limits<double>::infinity()).is_infinite());
}

TEST_CASE("points reject non-finite coordinates") {
  CHECK_THROWS_AS(Point({1.0, std::nan("")}), std::domain_error);
  CHECK_THROWS_AS((void)(Point{1.0} - Point{1.0, 2.0}), DimensionError);
}

TEST_CASE("eval_fn closed forms") {
  const auto cq = ConvexFn::clipped_quadratic_1d();
  CHECK(eval_fn(cq, Point{2.0}).value() == 2.0);
  CHECK(eval_fn(cq, Point{0.0}).value() == 0.0);
  CHECK(eval_fn(cq, Point{-3.0}).value() == doctest::Approx(2.5));  // -x - 1/2
  CHECK(eval_fn(cq, Point{-1.0}).value() == doctest::Approx(0.5));
  CHECK(eval_fn(cq, Point{3.0}).value() == doctest::Approx(4.0));   // 2x - 2
  CHECK(eval_fn(ConvexFn::shifted_norm_plus(), Point(10, 0.0)).value() == 0.0);
  CHECK(eval_fn(ConvexFn::shifted_norm_plus(), Point{3.0, 4.0}).value() == doctest::Approx(4.0));
  CHECK(eval_fn(ConvexFn::indicator_conjugate_quadratic_1d(), Point{3.0}).is_infinite());
  CHECK(eval_fn(ConvexFn::indicator_conjugate_quadratic_1d(), Point{1.0}).value() == 0.5);
  CHECK(eval_fn(ConvexFn::norm_on_unit_ball(), Point{0.6, 0.8}).value() == doctest::Approx(1.0));
  CHECK(eval_fn(ConvexFn::norm_on_unit_ball(), Point{0.6, 0.9}).is_infinite());
  CHECK(eval_fn(ConvexFn::pnorm(NormKind::l1), Point{1.0, -2.0}).value() == 3.0);
  CHECK(eval_fn(ConvexFn::pnorm(NormKind::linf), Point{1.0, -2.0}).value() == 2.0);
  CHECK(eval_fn(ConvexFn::half_squared_norm(), Point{1.0, 2.0}).value() == 2.5);
  const auto ma = ConvexFn::max_affine({{Point{1.0, 0.0}, 1.0}, {Point{0.0, 1.0}, -1.0}});
  CHECK(eval_fn(ma, Point{2.0, 0.5}).value() == 1.5);
}

TEST_CASE("eval_fn dimension checks") {
  CHECK_THROWS_AS((void)eval_fn(ConvexFn::clipped_quadratic_1d(), Point{1.0, 2.0}), DimensionError);
  const auto ma = ConvexFn::max_affine({{Point{1.0, 0.0}, 1.0}});
  CHECK_THROWS_AS((void)eval_fn(ma, Point{1.0}), DimensionError);
  CHECK_THROWS_AS(ConvexFn::max_affine({}), std::invalid_argument);
  CHECK_THROWS_AS(ConvexFn::max_affine({{Point{1.0}, 0.0}, {Point{1.0, 2.0}, 0.0}}), std::invalid_argument);
}

TEST_CASE("finite_everywhere and lipschitz flags") {
  CHECK(ConvexFn::clipped_quadratic_1d().finite_everywhere());
  CHECK(ConvexFn::half_squared_norm().finite_everywhere());
  CHECK_FALSE(ConvexFn::indicator_conjugate_quadratic_1d().finite_everywhere());
  CHECK_FALSE(ConvexFn::norm_on_unit_ball().finite_everywhere());
  CHECK(ConvexFn::clipped_quadratic_1d().lipschitz());
  CHECK(ConvexFn::shifted_norm_plus().lipschitz());
  CHECK(ConvexFn::pnorm(NormKind::l1).lipschitz());
  CHECK_FALSE(ConvexFn::half_squared_norm().lipschitz());
  CHECK_THROWS_AS(ConcaveFn(ConvexFn::indicator_conjugate_quadratic_1d()), std::invalid_argument);
  const ConcaveFn j(ConvexFn::half_squared_norm());
  CHECK(j(Point{2.0}.span()) == -2.0);
}

TEST_CASE("conjugate_analytic examples and involution") {
  CHECK(conjugate_analytic(ConvexFn::clipped_quadratic_1d()) == ConvexFn::indicator_conjugate_quadratic_1d());
  CHECK(conjugate_analytic(ConvexFn::half_squared_norm()) == ConvexFn::half_squared_norm());
  CHECK(conjugate_analytic(ConvexFn::shifted_norm_plus()) == ConvexFn::norm_on_unit_ball());
  CHECK(conjugate_analytic(ConvexFn::pnorm(NormKind::l1)) == ConvexFn::ball_indicator(NormKind::linf));
  CHECK_FALSE(conjugate_analytic(ConvexFn::max_affine({{Point{1.0}, 0.0}})).has_value());
  for (const auto& f : {ConvexFn::clipped_quadratic_1d(), ConvexFn::half_squared_norm(),
                        ConvexFn::shifted_norm_plus(), ConvexFn::pnorm(NormKind::l2)}) {
    CAPTURE(f.name());
    CHECK(conjugate_analytic(*conjugate_analytic(f)) == f);
  }
}

TEST_CASE("conjugate_numeric examples") {
  CHECK(std::abs(conjugate_numeric(ConvexFn::half_squared_norm(), Point{1.0}, 10, 100001) - 0.5) <= 1e-4);
  CHECK(std::abs(conjugate_numeric(ConvexFn::clipped_quadratic_1d(), Point{1.0}, 10, 100001) - 0.5) <= 1e-4);
  CHECK(std::abs(conjugate_numeric(ConvexFn::pnorm(NormKind::l2), Point{0.5}, 10, 100001)) <= 1e-9);
  CHECK_THROWS_AS((void)conjugate_numeric(ConvexFn::pnorm(NormKind::l2), Point(4, 0.0), 1, 3), OracleRefusal);
  CHECK_THROWS_AS((void)conjugate_numeric(ConvexFn::indicator_conjugate_quadratic_1d(), Point{0.0}, 1, 3),
                  std::invalid_argument);
}

TEST_CASE("numeric conjugate is a lower bound, tight when the maximizer is inside the box") {
  struct Case {
    ConvexFn f;
    double lo, hi;  // p-range whose maximizer lies well inside the box
  };
  const std::vector<Case> cases{{ConvexFn::clipped_quadratic_1d(), -1.0, 2.0},
                                {ConvexFn::half_squared_norm(), -3.0, 3.0},
                                {ConvexFn::shifted_norm_plus(), -1.0, 1.0},
                                {ConvexFn::pnorm(NormKind::l1), -1.0, 1.0}};
  std::mt19937_64 rng(5);
  for (const auto& c : cases) {
    const auto fstar = *conjugate_analytic(c.f);
    for (int i = 0; i < 20; ++i) {
      const Point p{fixtures::uniform(rng, c.lo, c.hi)};
      const double numeric = conjugate_numeric(c.f, p, 10, 20001);
      const double exact = eval_fn(fstar, p).value();
      CAPTURE(c.f.name());
      CAPTURE(p[0]);
      CHECK(numeric <= exact + 1e-4);
      CHECK(numeric >= exact - 1e-4);
    }
    // Outside dom f* the grid max keeps growing with the box.
    const Point far{c.hi + 0.5};
    if (eval_fn(fstar, far).is_infinite()) {
      CHECK(conjugate_numeric(c.f, far, 20, 4001) > conjugate_numeric(c.f, far, 10, 2001) + 1.0);
    }
  }
}

TEST_CASE("2D numeric conjugate agrees with the analytic one") {
  const Point p{0.3, -0.4};
  CHECK(conjugate_numeric(ConvexFn::half_squared_norm(), p, 2, 401) == doctest::Approx(0.125).epsilon(1e-3));
  CHECK(std::abs(conjugate_numeric(ConvexFn::shifted_norm_plus(), p, 4, 401) - 0.5) <= 1e-3);
}

TEST_CASE("asymptotic_fn examples") {
  const auto cq = ConvexFn::clipped_quadratic_1d();
  CHECK(asymptotic_fn(cq, Point{-1.0}).value() == 1.0);
  CHECK(asymptotic_fn(cq, Point{1.0}).value() == 2.0);
  CHECK(asymptotic_fn(ConvexFn::shifted_norm_plus(), fixtures::e(10, {3.0, 4.0})).value() == doctest::Approx(5.0));
  CHECK(asymptotic_fn(ConvexFn::half_squared_norm(), Point{0.1}).is_infinite());
  const auto ma = ConvexFn::max_affine({{Point{1.0, 0.0}, 3.0}, {Point{0.0, 2.0}, -1.0}});
  CHECK(asymptotic_fn(ma, Point{1.0, 1.0}).value() == 2.0);
  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 2}) {
    for (const auto& f : finite_catalog(n, rng)) {
      CAPTURE(f.name());
      CHECK(asymptotic_fn(f, Point(n, 0.0)) == ExtendedScalar(0.0));
    }
  }
}

TEST_CASE("asymptotic function is positively 1-homogeneous") {
  std::mt19937_64 rng(2);
  for (std::size_t n : {1, 2, 3}) {
    for (const auto& f : finite_catalog(n, rng)) {
      for (int trial = 0; trial < 10; ++trial) {
        const Point d = random_point(rng, n, -2, 2);
        const ExtendedScalar base = asymptotic_fn(f, d);
        for (double alpha : {0.5, 2.0, 10.0}) {
          const ExtendedScalar scaled = asymptotic_fn(f, alpha * d);
          CAPTURE(f.name());
          if (base.is_infinite()) {
            CHECK(scaled.is_infinite());
          } else {
            const double expect = alpha * base.value();
            CHECK(std::abs(scaled.value() - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
          }
        }
      }
    }
  }
}

TEST_CASE("numeric asymptotic fallback matches the closed forms on Lipschitz variants") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1, 2}) {
    for (const auto& f : finite_catalog(n, rng)) {
      if (!f.lipschitz()) continue;
      for (int trial = 0; trial < 10; ++trial) {
        const Point d = random_point(rng, n, -2, 2);
        CAPTURE(f.name());
        CHECK(asymptotic_numeric(f, d).value() == doctest::Approx(asymptotic_fn(f, d).value()).epsilon(1e-8));
      }
    }
  }
  // Quadratic growth only crosses the 1e12 threshold for large |d| within s <= 2^30.
  CHECK(asymptotic_numeric(ConvexFn::half_squared_norm(), Point{100.0}).is_infinite());
  CHECK(asymptotic_numeric(ConvexFn::half_squared_norm(), Point{0.0}).value() == 0.0);
}

TEST_CASE("inf_convolution_numeric examples") {
  const auto l2 = ConvexFn::pnorm(NormKind::l2);
  CHECK(std::abs(inf_convolution_numeric(as_point_fn(l2), as_point_fn(l2), Point{1.0}, 5, 10001).value() - 1.0) <=
        1e-3);
  const auto hsq = as_point_fn(ConvexFn::half_squared_norm());
  CHECK(std::abs(inf_convolution_numeric(hsq, hsq, Point{2.0}, 10, 10001).value() - 1.0) <= 1e-3);
  const auto cq = ConvexFn::clipped_quadratic_1d();
  CHECK(std::abs(inf_convolution_numeric(as_point_fn(cq), asymptotic_as_point_fn(cq), Point{0.0}, 5, 10001).value()) <=
        1e-3);
  const PointFn inf_everywhere = [](std::span<const double>) { return kInfinity; };
  CHECK(inf_convolution_numeric(inf_everywhere, hsq, Point{0.0}, 1, 11).is_infinite());
}

TEST_CASE("quadratic inf-convolution matches x^2/4") {
  // min_u u^2/2 + (x-u)^2/2 is attained at u = x/2, value x^2/4.
  const auto hsq = as_point_fn(ConvexFn::half_squared_norm());
  for (double x : {-3.0, -1.0, 0.0, 0.7, 2.0, 4.5}) {
    const double closed = x * x / 4.0;
    const double numeric = inf_convolution_numeric(hsq, hsq, Point{x}, 10, 10001).value();
    CAPTURE(x);
    CHECK(numeric >= closed - 1e-12);
    CHECK(numeric <= closed + 1e-3);
  }
}

TEST_CASE("f box f'_inf = f on the finite catalog") {
  std::mt19937_64 rng(4);
  for (std::size_t n : {1, 2}) {
    const std::size_t pts = n == 1 ? 4001 : 201;
    for (const auto& f : finite_catalog(n, rng)) {
      for (int i = 0; i < 50; ++i) {
        const Point x = random_point(rng, n, -3, 3);
        const double fx = eval_fn(f, x).value();
        const double conv =
            inf_convolution_numeric(as_point_fn(f), asymptotic_as_point_fn(f), x, 4, pts).value();
        CAPTURE(f.name());
        CHECK(std::abs(conv - fx) <= 1e-3);
      }
    }
  }
}

TEST_CASE("Fenchel-Young inequality with analytic conjugates") {
  std::mt19937_64 rng(6);
  for (std::size_t n : {1, 2, 3}) {
    std::vector<ConvexFn> fs{ConvexFn::half_squared_norm(), ConvexFn::shifted_norm_plus(),
                             ConvexFn::pnorm(NormKind::l1), ConvexFn::pnorm(NormKind::l2),
                             ConvexFn::pnorm(NormKind::linf)};
    if (n == 1) fs.push_back(ConvexFn::clipped_quadratic_1d());
    for (const auto& f : fs) {
      const auto fstar = *conjugate_analytic(f);
      for (int i = 0; i < 200; ++i) {
        const Point x = random_point(rng, n, -4, 4);
        const Point p = random_point(rng, n, -1.5, 2.5);
        const ExtendedScalar lhs = eval_fn(f, x) + eval_fn(fstar, p);
        CAPTURE(f.name());
        if (lhs.is_finite()) CHECK(lhs.value() >= dot(p.span(), x.span()) - 1e-9);
      }
    }
  }
}

TEST_CASE("kink distance and domain snapping") {
  const auto cq = ConvexFn::clipped_quadratic_1d();
  CHECK(kink_distance(cq, Point{0.0}.span()) == 1.0);
  CHECK(kink_distance(cq, Point{1.9}.span()) == doctest::Approx(0.1));
  CHECK(kink_distance(ConvexFn::shifted_norm_plus(), Point{0.0, 2.0}.span()) == 1.0);
  CHECK(std::isinf(kink_distance(ConvexFn::half_squared_norm(), Point{1.0}.span())));
  const auto ma = ConvexFn::max_affine({{Point{1.0}, 0.0}, {Point{-1.0}, 0.0}});
  CHECK(kink_distance(ma, Point{3.0}.span()) == doctest::Approx(3.0));

  const auto icq = ConvexFn::indicator_conjugate_quadratic_1d();
  CHECK(snap_to_domain(icq, Point{2.0 + 1e-9}, 1e-6) == Point{2.0});
  CHECK(snap_to_domain(icq, Point{2.1}, 1e-6) == Point{2.1});
  const Point q = snap_to_domain(ConvexFn::norm_on_unit_ball(), Point{0.6 * (1 + 1e-9), 0.8 * (1 + 1e-9)}, 1e-6);
  CHECK(eval_fn(ConvexFn::norm_on_unit_ball(), q).is_finite());
}

TEST_CASE("dual norms") {
  CHECK(dual(NormKind::l1) == NormKind::linf);
  CHECK(dual(NormKind::linf) == NormKind::l1);
  CHECK(dual(NormKind::l2) == NormKind::l2);
  CHECK(to_string(NormKind::linf) == "inf");
}
