#pragma once

#include <array>
#include <ostream>

#include "ellsep/box.hpp"
#include "ellsep/interval.hpp"
#include "ellsep/signed_perm.hpp"

namespace ellsep {

// Coefficients of f(q,x) = q0 + q1*x1 + q2*x2 + q3*x1^2 + q4*x1*x2 + q5*x2^2.
struct QuadraticForm {
  double q0 = 0, q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;

  std::array<double, 6> coeffs() const { return {q0, q1, q2, q3, q4, q5}; }
  static QuadraticForm from_coeffs(const std::array<double, 6>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5]};
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Direct sum of the six terms, fixed evaluation order. Sign symmetries of
// the arguments commute with this evaluation exactly in floating point.
double eval(const QuadraticForm& q, const Point& x);

// Natural interval extension; encloses {f(q,x) : x in b}. Empty box -> empty.
Interval eval(const QuadraticForm& q, const Box& b);

// True iff q3 > 0 and 4*q3*q5 - q4^2 > 0 (positive-definite quadratic part).
bool is_ellipse(const QuadraticForm& q);

// Signed reindexing of (q0..q5); Cauchy position k corresponds to q_{k-1}.
QuadraticForm apply_param_symmetry(const SignedPerm& s, const QuadraticForm& q);

// Parameter symmetry conjugate to swapping x1 and x2.
SignedPerm swap_param_symmetry();

// Foci a, b and distance-sum bound ell of a filled ellipse
// {x : |x-a| + |x-b| <= ell}.
struct Foci {
  Point a{};
  Point b{};
  double ell = 0;
};

// Quadratic form whose sublevel set {f <= 0} is the filled ellipse with the
// given foci: interior points (distance sum < ell) evaluate negative.
// Throws DegenerateEllipseError when ell <= |a-b|.
QuadraticForm from_foci(const Foci& f);

std::ostream& operator<<(std::ostream& os, const QuadraticForm& q);

}  // namespace ellsep
