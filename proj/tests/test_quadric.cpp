#include <doctest.h>

#include <cmath>

#include "ellsep/errors.hpp"
#include "ellsep/quadratic_form.hpp"
#include "support/ellipse_oracle.hpp"
#include "support/random_gen.hpp"

using ellsep::Box;
using ellsep::Foci;
using ellsep::Interval;
using ellsep::Point;
using ellsep::QuadraticForm;
using ellsep::from_foci;
namespace ts = testsupport;

namespace {

const QuadraticForm kUnitCircle{-1, 0, 0, 1, 0, 1};

// Squared-distance product form the coefficient block expands; the sign of
// the expansion separates the filled ellipse from its complement.
double quartic_reference(const Foci& f, const Point& x) {
  const double da = (x[0] - f.a[0]) * (x[0] - f.a[0]) + (x[1] - f.a[1]) * (x[1] - f.a[1]);
  const double db = (x[0] - f.b[0]) * (x[0] - f.b[0]) + (x[1] - f.b[1]) * (x[1] - f.b[1]);
  const double rest = f.ell * f.ell - da - db;
  return 4 * da * db - rest * rest;
}

double max_abs_coeff(const QuadraticForm& q) {
  double m = 0;
  for (const double c : q.coeffs()) m = std::max(m, std::fabs(c));
  return m;
}

}  // namespace

TEST_CASE("point evaluation follows the six-term sum") {
  CHECK(eval(kUnitCircle, Point{0, 0}) == -1.0);
  CHECK(eval(QuadraticForm{-5, 1, 1, 3, 1, 2}, Point{1, 1}) == 3.0);
  CHECK(eval(QuadraticForm{-192, 0, 0, 48, 0, 64}, Point{2, 0}) == 0.0);
}

TEST_CASE("box evaluation encloses the range") {
  const Interval at_center = eval(kUnitCircle, Box(Interval(0, 0), Interval(0, 0)));
  CHECK(at_center.contains(-1.0));
  CHECK(at_center.width() <= 4 * std::ldexp(1.0, -52));

  const Interval off = eval(kUnitCircle, Box(Interval(2, 3), Interval(0, 1)));
  CHECK(off.lo() >= 3.0 - 4 * std::ldexp(3.0, -52));
  CHECK(off.hi() <= 10.0 + 4 * std::ldexp(10.0, -52));

  CHECK(eval(kUnitCircle, Box::empty(2)).is_empty());
}

TEST_CASE("box evaluation encloses sampled point values") {
  ts::Rng rng(8181u);
  const Box region(Interval(-5, 5), Interval(-5, 5));
  for (int iter = 0; iter < 300; ++iter) {
    const QuadraticForm q = ts::random_ellipse_form(rng);
    const Box b = ts::random_box_in(rng, region);
    const Interval range = eval(q, b);
    for (int s = 0; s < 20; ++s) {
      const Point x{ts::sample_point(rng, b[0]), ts::sample_point(rng, b[1])};
      CHECK(range.contains(eval(q, x)));
    }
  }
}

TEST_CASE("ellipse predicate checks the quadratic part") {
  CHECK(is_ellipse(QuadraticForm{-5, 1, 1, 3, 1, 2}));
  CHECK(!is_ellipse(QuadraticForm{0, 0, 0, 1, 0, -1}));  // hyperbola
  CHECK(!is_ellipse(QuadraticForm{0, 0, 0, 1, 2, 1}));   // parabola
  CHECK(!is_ellipse(QuadraticForm{0, 0, 0, -1, 0, -1}));
}

TEST_CASE("parameter symmetries reindex the coefficients") {
  const QuadraticForm q{-5, 1, 1, 3, 1, 2};
  CHECK(apply_param_symmetry(ellsep::swap_param_symmetry(), q) ==
        QuadraticForm{-5, 1, 1, 2, 1, 3});
  CHECK(apply_param_symmetry(ellsep::SignedPerm::identity(6), q) == q);
  CHECK(apply_param_symmetry(ellsep::SignedPerm({1, -2, 3, 4, -5, 6}), q) ==
        QuadraticForm{-5, -1, 1, 3, -1, 2});
  CHECK_THROWS_AS(apply_param_symmetry(ellsep::SignedPerm::identity(2), q),
                  std::invalid_argument);
}

TEST_CASE("the coordinate swap is an involution on parameters") {
  ts::Rng rng(2222u);
  for (int iter = 0; iter < 100; ++iter) {
    const QuadraticForm q = ts::random_ellipse_form(rng);
    const auto sigma = ellsep::swap_param_symmetry();
    CHECK(apply_param_symmetry(sigma, apply_param_symmetry(sigma, q)) == q);
  }
}

TEST_CASE("foci coefficients reproduce the closed-form cases exactly") {
  CHECK(from_foci({{0, 0}, {0, 0}, 2}) == QuadraticForm{-16, 0, 0, 16, 0, 16});
  CHECK(from_foci({{-1, 0}, {1, 0}, 4}) == QuadraticForm{-192, 0, 0, 48, 0, 64});
  CHECK(from_foci({{-2, 1}, {-2, -1}, 6}) == QuadraticForm{-576, 576, 0, 144, 0, 128});
}

TEST_CASE("degenerate distance-sum bounds are rejected") {
  CHECK_THROWS_AS(from_foci({{-1, 0}, {1, 0}, 2.0}), ellsep::DegenerateEllipseError);
  CHECK_THROWS_AS(from_foci({{-1, 0}, {1, 0}, 1.5}), ellsep::DegenerateEllipseError);
  CHECK_THROWS_AS(from_foci({{0, 0}, {0, 0}, 0.0}), ellsep::DegenerateEllipseError);
}

TEST_CASE("foci form vanishes on the boundary and signs the two sides") {
  ts::Rng rng(99100u);
  for (int iter = 0; iter < 100; ++iter) {
    const Foci f = ts::random_foci(rng);
    const QuadraticForm q = from_foci(f);
    REQUIRE(is_ellipse(q));
    const ts::ParametricEllipse shape = ts::foci_shape(f);
    const double tol = 1e-6 * max_abs_coeff(q);
    for (int s = 0; s < 100; ++s) {
      const double t = 2 * ts::kPi * s / 100.0;
      const Point on = shape.at(t);
      CHECK(std::fabs(eval(q, on)) <= tol);

      // verify the sign against the distance sum itself
      const Point in{shape.cx + 0.9 * (on[0] - shape.cx), shape.cy + 0.9 * (on[1] - shape.cy)};
      const Point out{shape.cx + 1.1 * (on[0] - shape.cx), shape.cy + 1.1 * (on[1] - shape.cy)};
      const auto dist_sum = [&f](const Point& p) {
        return std::hypot(p[0] - f.a[0], p[1] - f.a[1]) +
               std::hypot(p[0] - f.b[0], p[1] - f.b[1]);
      };
      if (dist_sum(in) < f.ell * (1 - 1e-9)) CHECK(eval(q, in) < 0);
      if (dist_sum(out) > f.ell * (1 + 1e-9)) CHECK(eval(q, out) > 0);
    }
  }
}

TEST_CASE("foci form equals the expanded quartic") {
  ts::Rng rng(424242u);
  for (int iter = 0; iter < 10; ++iter) {
    const Foci f = ts::random_foci(rng);
    const QuadraticForm q = from_foci(f);
    for (int s = 0; s < 100; ++s) {
      const Point x{ts::uniform(rng, -10, 10), ts::uniform(rng, -10, 10)};
      const double got = eval(q, x);
      const double want = quartic_reference(f, x);
      const double scale = std::max({1.0, std::fabs(got), std::fabs(want)});
      CHECK(std::fabs(got - want) <= 1e-9 * scale);
    }
  }
}
