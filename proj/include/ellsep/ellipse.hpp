#pragma once

#include <vector>

#include "ellsep/box.hpp"
#include "ellsep/quadratic_form.hpp"
#include "ellsep/signed_perm.hpp"

namespace ellsep {

// Boundary points of extremal coordinates. North/South carry the largest and
// smallest ordinate, East/West the largest and smallest abscissa.
struct CardinalPoints {
  Point north{};
  Point east{};
  Point south{};
  Point west{};
};

// Output of a separator application on a box [x]:
//  - points of [x] removed by x_out (in [x]\x_out) are proven outside the set,
//  - points of [x] removed by x_in are proven inside,
//  - both boxes are subsets of [x] and their union covers it.
struct SepResult {
  Box x_in;
  Box x_out;
};

// Abscissa of the boundary point with ordinate x2 on the arc between North
// and East (the larger root of the quadratic in x1). Ordinates within
// rounding of the band edge are accepted; beyond that the ordinate is
// infeasible. Requires is_ellipse(q).
double phi(const QuadraticForm& q, double x2);

// Largest feasible ordinate (the North's). Requires is_ellipse(q); throws
// EmptyEllipseError when the conic has empty interior.
double max_feasible(const QuadraticForm& q);

// Smallest feasible ordinate (the South's).
double min_feasible(const QuadraticForm& q);

CardinalPoints cardinal_points(const QuadraticForm& q);

// Smallest box containing the North and the East, outward-rounded so the
// whole arc between them is enclosed.
Box positive_quadrant_hull(const QuadraticForm& q);

// Filled ellipse {f(q,.) <= 0} prepared for repeated contraction: caches the
// conjugate parameter vectors and quadrant hulls for all four plane
// symmetries. Immutable after construction, safe to share across threads.
class Ellipse {
 public:
  explicit Ellipse(const QuadraticForm& q);

  const QuadraticForm& coefficients() const { return q_; }
  const CardinalPoints& cardinals() const { return cardinals_; }
  const Box& positive_hull() const { return quadrants_[0].hull; }

  // Hull of [x] ∩ (arc between North and East), up to outward rounding.
  Box contract_positive(const Box& x) const;

  // Hull of [x] ∩ boundary: union of the four conjugated quadrant
  // contractions. Minimal up to rounding.
  Box contract_boundary(const Box& x) const;

  // Separator for the filled ellipse built from the boundary contraction
  // and a rigorous midpoint sign test on the boundary-free slabs.
  SepResult separate(const Box& x) const;

 private:
  struct Quadrant {
    SignedPerm eps;           // self-inverse diagonal plane symmetry
    QuadraticForm q;          // conjugate parameters: f(q, eps(x)) = f(q_eps, x)
    QuadraticForm q_swapped;  // coordinates swapped, for the ordinate direction
    Box hull;                 // outward-rounded quadrant hull of this arc
    Interval band_top;        // enclosure of the largest feasible ordinate
    Interval band_right;      // enclosure of the largest feasible abscissa
  };

  static Box contract_quadrant(const Quadrant& quad, const Box& x);

  QuadraticForm q_;
  CardinalPoints cardinals_;
  std::vector<Quadrant> quadrants_;
};

// One-shot conveniences over a freshly prepared Ellipse.
Box contract_positive(const QuadraticForm& q, const Box& x);
Box contract_boundary(const QuadraticForm& q, const Box& x);
SepResult separate(const QuadraticForm& q, const Box& x);

// Axis-aligned slabs covering [x] \ c for c ⊆ [x], ordered low/high per axis,
// first axis first; degenerate slabs already covered by c are dropped. Used
// by the separator and the paver; c empty yields {x}.
std::vector<Box> complement_slabs(const Box& x, const Box& c);

}  // namespace ellsep
