#include <doctest.h>

#include <cmath>

#include "ellsep/ellipse.hpp"
#include "ellsep/errors.hpp"
#include "ellsep/separator.hpp"
#include "support/random_gen.hpp"

using ellsep::Box;
using ellsep::Interval;
using ellsep::Point;
using ellsep::QuadraticForm;
using ellsep::SepResult;
using ellsep::SeparatorPtr;
using ellsep::make_intersection;
using ellsep::make_complement;
using ellsep::make_ellipse_separator;
namespace ts = testsupport;

namespace {

const QuadraticForm kUnitCircle{-1, 0, 0, 1, 0, 1};
const QuadraticForm kTilted{-5, 1, 1, 3, 1, 2};

}  // namespace

TEST_CASE("forward-backward contraction narrows the circle constraint") {
  const Box got = fwd_bwd_contract(kUnitCircle, Interval::nonpositive(),
                                   Box(Interval(-2, 2), Interval(-2, 2)));
  REQUIRE(!got.is_empty());
  for (int i = 0; i < 2; ++i) {
    CHECK(got[i].lo() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(got[i].hi() == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK(fwd_bwd_contract(kUnitCircle, Interval::nonpositive(),
                         Box(Interval(2, 3), Interval(0, 1)))
            .is_empty());
}

TEST_CASE("forward-backward is sound for sampled feasible points") {
  ts::Rng rng(121212u);
  const Box region(Interval(-6, 6), Interval(-6, 6));
  for (int iter = 0; iter < 200; ++iter) {
    const QuadraticForm q = ts::random_ellipse_form(rng);
    const Box x = ts::random_box_in(rng, region);
    const Interval bound = iter % 2 == 0 ? Interval::nonpositive() : Interval(-0.5, 0.5);
    const Box got = fwd_bwd_contract(q, bound, x);
    for (int s = 0; s < 50; ++s) {
      const Point p{ts::sample_point(rng, x[0]), ts::sample_point(rng, x[1])};
      if (bound.contains(eval(q, p))) {
        REQUIRE(!got.is_empty());
        CHECK(got.contains(p));
      }
    }
  }
}

TEST_CASE("the dependency effect keeps forward-backward wider than minimal") {
  const Box frame(Interval(-7, 7), Interval(-7, 7));
  const Box fb = fwd_bwd_contract(kTilted, Interval(0.0, 0.0), frame);
  const Box minimal = contract_boundary(kTilted, frame);
  REQUIRE(!fb.is_empty());
  REQUIRE(!minimal.is_empty());
  bool strictly_wider_somewhere = false;
  for (int i = 0; i < 2; ++i) {
    CHECK(minimal[i].lo() >= fb[i].lo() - 1e-9);
    CHECK(minimal[i].hi() <= fb[i].hi() + 1e-9);
    if (fb[i].width() > minimal[i].width() + 1e-6) strictly_wider_somewhere = true;
  }
  CHECK(strictly_wider_somewhere);
}

TEST_CASE("minimal contraction never exceeds forward-backward on random boxes") {
  ts::Rng rng(343434u);
  const Box region(Interval(-7, 7), Interval(-7, 7));
  for (int iter = 0; iter < 100; ++iter) {
    const QuadraticForm q = ts::random_ellipse_form(rng);
    const ellsep::Ellipse ell(q);
    const Box x = ts::random_box_in(rng, region);
    const Box minimal = ell.contract_boundary(x);
    const Box fb = fwd_bwd_contract(q, Interval(0.0, 0.0), x);
    if (minimal.is_empty()) continue;
    REQUIRE(!fb.is_empty());
    for (int i = 0; i < 2; ++i)
      CHECK(minimal[i].width() <= fb[i].width() + 1e-9);
  }
}

TEST_CASE("the inequality separator wraps the minimal separation") {
  const SeparatorPtr sep = make_ellipse_separator(kUnitCircle);
  CHECK(!sep->label().empty());

  const Box inside(Interval(-0.3, 0.3), Interval(-0.3, 0.3));
  const SepResult r1 = sep->separate(inside);
  CHECK(r1.x_in.is_empty());
  CHECK(r1.x_out == inside);

  const Box outside(Interval(2, 3), Interval(2, 3));
  const SepResult r2 = sep->separate(outside);
  CHECK(r2.x_in == outside);
  CHECK(r2.x_out.is_empty());

  CHECK_THROWS_AS(make_ellipse_separator(QuadraticForm{0, 0, 0, 1, 0, -1}),
                  ellsep::NotAnEllipseError);
}

TEST_CASE("complement swaps the separated sides") {
  const SeparatorPtr sep = make_ellipse_separator(kUnitCircle);
  const SeparatorPtr comp = make_complement(sep);

  const Box inside(Interval(-0.3, 0.3), Interval(-0.3, 0.3));
  const SepResult r = comp->separate(inside);
  CHECK(r.x_out.is_empty());
  CHECK(r.x_in == inside);

  const Box strip(Interval(0, 2), Interval(-0.5, 0.5));
  const SepResult rc = comp->separate(strip);
  const SepResult ro = sep->separate(strip);
  CHECK(rc.x_in == ro.x_out);
  CHECK(rc.x_out == ro.x_in);

  // double complement is the identity, box for box
  ts::Rng rng(787878u);
  const SeparatorPtr twice = make_complement(make_complement(sep));
  const Box region(Interval(-3, 3), Interval(-3, 3));
  for (int iter = 0; iter < 100; ++iter) {
    const Box x = ts::random_box_in(rng, region);
    const SepResult a = sep->separate(x);
    const SepResult b = twice->separate(x);
    CHECK(a.x_in == b.x_in);
    CHECK(a.x_out == b.x_out);
  }
}

TEST_CASE("intersection of one separator is that separator") {
  const SeparatorPtr sep = make_ellipse_separator(kUnitCircle);
  const SeparatorPtr one = make_intersection({sep});
  ts::Rng rng(10101u);
  const Box region(Interval(-3, 3), Interval(-3, 3));
  for (int iter = 0; iter < 100; ++iter) {
    const Box x = ts::random_box_in(rng, region);
    const SepResult a = sep->separate(x);
    const SepResult b = one->separate(x);
    CHECK(a.x_in == b.x_in);
    CHECK(a.x_out == b.x_out);
  }
  CHECK_THROWS_AS(make_intersection({}), std::invalid_argument);
}

TEST_CASE("intersection removes boxes that violate any member") {
  // unit disk and a disk of radius 1 at (2.5, 2.5): [2,3]^2 misses disk 1
  const QuadraticForm disk2{-1 + 2.5 * 2.5 + 2.5 * 2.5, -5, -5, 1, 0, 1};
  REQUIRE(eval(disk2, Point{2.5, 2.5}) == -1.0);
  const SeparatorPtr both =
      make_intersection({make_ellipse_separator(kUnitCircle), make_ellipse_separator(disk2)});
  const Box far(Interval(2, 3), Interval(2, 3));
  const SepResult r = both->separate(far);
  CHECK(r.x_out.is_empty());
  CHECK(r.x_in == far);
}

TEST_CASE("intersection keeps jointly feasible points") {
  ts::Rng rng(90909u);
  const QuadraticForm q1 = kUnitCircle;
  const QuadraticForm q2{-1.0 + 0.25, -1, 0, 1, 0, 1};  // unit disk at (0.5, 0)
  const SeparatorPtr both =
      make_intersection({make_ellipse_separator(q1), make_ellipse_separator(q2)});
  const Box region(Interval(-2, 2), Interval(-2, 2));
  for (int iter = 0; iter < 200; ++iter) {
    const Box x = ts::random_box_in(rng, region);
    const SepResult r = both->separate(x);
    for (int s = 0; s < 30; ++s) {
      const Point p{ts::sample_point(rng, x[0]), ts::sample_point(rng, x[1])};
      const bool in_both = eval(q1, p) <= 0 && eval(q2, p) <= 0;
      const bool out_somewhere = eval(q1, p) > 0 || eval(q2, p) > 0;
      if (in_both) CHECK(r.x_out.contains(p));
      if (out_somewhere) CHECK(r.x_in.contains(p));
      CHECK((r.x_in.contains(p) || r.x_out.contains(p)));
    }
  }
}
