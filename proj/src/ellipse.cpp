#include "ellsep/ellipse.hpp"

#include <cmath>
#include <stdexcept>

#include "ellsep/errors.hpp"

namespace ellsep {

namespace {

// Relative tolerance for clamping a slightly negative discriminant at the
// arc apexes, scaled by the magnitudes of the terms that formed it.
constexpr double kDiscriminantTol = 1e-12;

void require_ellipse(const QuadraticForm& q) {
  if (!(q.q3 > 0))
    throw NotAnEllipseError("not an ellipse: predicate q3 > 0 failed");
  if (!(4 * q.q3 * q.q5 - q.q4 * q.q4 > 0))
    throw NotAnEllipseError("not an ellipse: predicate 4*q3*q5 - q4^2 > 0 failed");
}

// Feasible ordinates are exactly the solutions of a2*x2^2 + b2*x2 + c2 <= 0.
struct BandQuadratic {
  double a2, b2, c2;
};

BandQuadratic band_quadratic(const QuadraticForm& q) {
  return {4 * q.q3 * q.q5 - q.q4 * q.q4, 4 * q.q3 * q.q2 - 2 * q.q1 * q.q4,
          4 * q.q3 * q.q0 - q.q1 * q.q1};
}

double feasible_root(const QuadraticForm& q, bool largest) {
  require_ellipse(q);
  const auto [a2, b2, c2] = band_quadratic(q);
  const double d2 = b2 * b2 - 4 * a2 * c2;
  if (d2 < 0)
    throw EmptyEllipseError("empty ellipse: the sublevel set has no interior");
  const double root = std::sqrt(d2);
  return (largest ? -b2 + root : -b2 - root) / (2 * a2);
}

// Interval evaluation of phi over the ordinate range x2, which may
// overshoot the feasibility band by rounding (its source is an
// outward-rounded quadrant hull). An entirely negative discriminant means
// the whole range sits past the band edge; the arc piece it can address is
// then the apex, whose abscissa -b1/(2*q3) is evaluated over band_edge, an
// enclosure of the true edge ordinate. A discriminant straddling zero needs
// no special case: the clipped square root already dominates the ordinate
// overshoot near the apex.
Interval arc_abscissa_enclosure(const QuadraticForm& q, const Interval& x2,
                                const Interval& band_edge) {
  const Interval b1 = Interval(q.q1) + Interval(q.q4) * x2;
  const Interval c1 =
      Interval(q.q0) + Interval(q.q2) * x2 + Interval(q.q5) * sqr(x2);
  const Interval delta =
      sqr(b1) - Interval(4.0) * Interval(q.q3) * c1;
  const Interval denom = Interval(2.0) * Interval(q.q3);
  if (delta.hi() < 0) {
    const Interval b1_edge = Interval(q.q1) + Interval(q.q4) * band_edge;
    return -b1_edge / denom;
  }
  return (-b1 + sqrt(delta)) / denom;
}

// Enclosure of the largest (or smallest) feasible ordinate.
Interval feasible_root_enclosure(const QuadraticForm& q, bool largest) {
  const Interval a2 =
      Interval(4.0) * Interval(q.q3) * Interval(q.q5) - sqr(Interval(q.q4));
  const Interval b2 = Interval(4.0) * Interval(q.q3) * Interval(q.q2) -
                      Interval(2.0) * Interval(q.q1) * Interval(q.q4);
  const Interval c2 =
      Interval(4.0) * Interval(q.q3) * Interval(q.q0) - sqr(Interval(q.q1));
  const Interval d2 = sqr(b2) - Interval(4.0) * a2 * c2;
  if (d2.hi() < 0)
    throw EmptyEllipseError("empty ellipse: the sublevel set has no interior");
  const Interval root = sqrt(d2);
  const Interval num = largest ? -b2 + root : -b2 - root;
  return num / (Interval(2.0) * a2);
}

}  // namespace

double phi(const QuadraticForm& q, double x2) {
  require_ellipse(q);
  const double b1 = q.q1 + q.q4 * x2;
  const double c1 = q.q0 + q.q2 * x2 + q.q5 * x2 * x2;
  const double four_ac = 4 * q.q3 * c1;
  double delta = b1 * b1 - four_ac;
  if (delta < 0) {
    // The roundoff in delta is proportional to the magnitudes of the summed
    // terms, which can vastly exceed the cancelled results b1 and c1.
    const double b1_mag = std::fabs(q.q1) + std::fabs(q.q4 * x2);
    const double c1_mag =
        std::fabs(q.q0) + std::fabs(q.q2 * x2) + std::fabs(q.q5 * x2 * x2);
    const double scale =
        std::max({1.0, b1 * b1, std::fabs(four_ac), b1_mag * b1_mag,
                  4 * q.q3 * c1_mag});
    if (delta < -kDiscriminantTol * scale)
      throw InfeasibleOrdinateError("ordinate outside the feasible band");
    delta = 0;
  }
  return (-b1 + std::sqrt(delta)) / (2 * q.q3);
}

double max_feasible(const QuadraticForm& q) { return feasible_root(q, true); }

double min_feasible(const QuadraticForm& q) { return feasible_root(q, false); }

CardinalPoints cardinal_points(const QuadraticForm& q) {
  require_ellipse(q);
  const QuadraticForm qs = apply_param_symmetry(swap_param_symmetry(), q);
  // At a feasibility-band edge the discriminant is zero by definition, so
  // the double root -b1/(2*q3) is used directly instead of re-deciding the
  // sign of a cancelled discriminant inside phi.
  const auto apex = [](const QuadraticForm& p, double x2) {
    return -(p.q1 + p.q4 * x2) / (2 * p.q3);
  };
  const double n2 = max_feasible(q);
  const double s2 = min_feasible(q);
  const double e1 = max_feasible(qs);
  const double w1 = min_feasible(qs);
  CardinalPoints c;
  c.north = {apex(q, n2), n2};
  c.south = {apex(q, s2), s2};
  c.east = {e1, apex(qs, e1)};
  c.west = {w1, apex(qs, w1)};
  return c;
}

Box positive_quadrant_hull(const QuadraticForm& q) {
  require_ellipse(q);
  const QuadraticForm qs = apply_param_symmetry(swap_param_symmetry(), q);
  const Interval psi_n = feasible_root_enclosure(q, true);
  const Interval psi_e = feasible_root_enclosure(qs, true);
  const Interval north_x1 = arc_abscissa_enclosure(q, psi_n, psi_n);
  const Interval east_x2 = arc_abscissa_enclosure(qs, psi_e, psi_e);
  return Box(Interval(north_x1.lo(), psi_e.hi()),
             Interval(east_x2.lo(), psi_n.hi()));
}

Ellipse::Ellipse(const QuadraticForm& q) : q_(q) {
  require_ellipse(q);
  cardinals_ = cardinal_points(q);
  const SignedPerm swap = swap_param_symmetry();
  quadrants_.reserve(4);
  for (const auto& entries :
       {std::vector<int>{1, 2}, {1, -2}, {-1, 2}, {-1, -2}}) {
    SignedPerm eps(entries);
    const QuadraticForm qe = apply_param_symmetry(choice_function(eps), q);
    const QuadraticForm qes = apply_param_symmetry(swap, qe);
    Box quad_hull = positive_quadrant_hull(qe);
    quadrants_.push_back({std::move(eps), qe, qes, std::move(quad_hull),
                          feasible_root_enclosure(qe, true),
                          feasible_root_enclosure(qes, true)});
  }
}

Box Ellipse::contract_quadrant(const Quadrant& quad, const Box& x) {
  const Box b = intersect(x, quad.hull);
  if (b.is_empty()) return Box::empty(2);
  // phi is non-increasing across the quadrant, so the arc over the ordinate
  // range [b2-, b2+] spans abscissas [phi(b2+), phi(b2-)], and symmetrically
  // for the ordinates. hull() absorbs enclosure overlap at the apexes.
  const Interval x1_at_top =
      arc_abscissa_enclosure(quad.q, Interval(b[1].hi()), quad.band_top);
  const Interval x1_at_bot =
      arc_abscissa_enclosure(quad.q, Interval(b[1].lo()), quad.band_top);
  const Interval x2_at_right =
      arc_abscissa_enclosure(quad.q_swapped, Interval(b[0].hi()), quad.band_right);
  const Interval x2_at_left =
      arc_abscissa_enclosure(quad.q_swapped, Interval(b[0].lo()), quad.band_right);
  return intersect(
      x, Box(hull(x1_at_top, x1_at_bot), hull(x2_at_right, x2_at_left)));
}

Box Ellipse::contract_positive(const Box& x) const {
  if (x.dim() != 2)
    throw std::invalid_argument("contract_positive: box must be 2-dimensional");
  return contract_quadrant(quadrants_[0], x);
}

Box Ellipse::contract_boundary(const Box& x) const {
  if (x.dim() != 2)
    throw std::invalid_argument("contract_boundary: box must be 2-dimensional");
  Box out = Box::empty(2);
  for (const Quadrant& quad : quadrants_) {
    // The diagonal symmetries are involutions, so eps doubles as its inverse.
    const Box y = quad.eps.apply(x);
    const Box c = contract_quadrant(quad, y);
    out = hull(out, quad.eps.apply(c));
  }
  return out;
}

namespace {

enum class RegionSign { negative, positive, unknown };

// Sign of f on a boundary-free region, decided by an outward-rounded
// evaluation at the midpoint; unknown when the enclosure straddles zero.
RegionSign region_sign(const QuadraticForm& q, const Box& region) {
  const std::vector<double> m = region.mid();
  const Interval fx = eval(q, Box(Interval(m[0]), Interval(m[1])));
  if (fx.hi() <= 0) return RegionSign::negative;
  if (fx.lo() > 0) return RegionSign::positive;
  return RegionSign::unknown;
}

}  // namespace

SepResult Ellipse::separate(const Box& x) const {
  if (x.dim() != 2)
    throw std::invalid_argument("separate: box must be 2-dimensional");
  if (x.is_empty()) return {Box::empty(2), Box::empty(2)};

  const Box c = contract_boundary(x);
  if (c.is_empty()) {
    switch (region_sign(q_, x)) {
      case RegionSign::negative:
        return {Box::empty(2), x};
      case RegionSign::positive:
        return {x, Box::empty(2)};
      case RegionSign::unknown:
        return {x, x};
    }
  }

  Box in_acc = c;
  Box out_acc = c;
  for (const Box& slab : complement_slabs(x, c)) {
    switch (region_sign(q_, slab)) {
      case RegionSign::negative:
        out_acc = hull(out_acc, slab);
        break;
      case RegionSign::positive:
        in_acc = hull(in_acc, slab);
        break;
      case RegionSign::unknown:
        out_acc = hull(out_acc, slab);
        in_acc = hull(in_acc, slab);
        break;
    }
  }
  return {in_acc, out_acc};
}

Box contract_positive(const QuadraticForm& q, const Box& x) {
  return Ellipse(q).contract_positive(x);
}

Box contract_boundary(const QuadraticForm& q, const Box& x) {
  return Ellipse(q).contract_boundary(x);
}

SepResult separate(const QuadraticForm& q, const Box& x) {
  return Ellipse(q).separate(x);
}

std::vector<Box> complement_slabs(const Box& x, const Box& c) {
  if (x.dim() != c.dim())
    throw std::invalid_argument("complement_slabs: dimension mismatch");
  if (x.is_empty()) return {};
  const Box cc = intersect(c, x);
  if (cc.is_empty()) return {x};

  std::vector<Box> slabs;
  const int n = x.dim();
  for (int axis = 0; axis < n; ++axis) {
    // Earlier axes are pinned to cc, later axes keep the full x range, so
    // the slabs tile x \ cc with pairwise disjoint interiors. Zero-width
    // side pieces are already covered by cc or by a later-axis slab.
    const auto side_slab = [&](const Interval& piece) {
      std::vector<Interval> comps;
      comps.reserve(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) {
        if (j < axis)
          comps.push_back(cc[j]);
        else if (j == axis)
          comps.push_back(piece);
        else
          comps.push_back(x[j]);
      }
      return Box(std::move(comps));
    };
    if (x[axis].lo() < cc[axis].lo())
      slabs.push_back(side_slab(Interval(x[axis].lo(), cc[axis].lo())));
    if (cc[axis].hi() < x[axis].hi())
      slabs.push_back(side_slab(Interval(cc[axis].hi(), x[axis].hi())));
  }
  return slabs;
}

}  // namespace ellsep
