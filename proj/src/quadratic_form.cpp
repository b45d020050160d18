#include "ellsep/quadratic_form.hpp"

#include <cmath>

#include "ellsep/errors.hpp"

namespace ellsep {

double eval(const QuadraticForm& q, const Point& x) {
  return q.q0 + q.q1 * x[0] + q.q2 * x[1] + q.q3 * (x[0] * x[0]) +
         q.q4 * (x[0] * x[1]) + q.q5 * (x[1] * x[1]);
}

Interval eval(const QuadraticForm& q, const Box& b) {
  if (b.dim() != 2) throw std::invalid_argument("eval: box must be 2-dimensional");
  if (b.is_empty()) return Interval::empty();
  const Interval x1 = b[0];
  const Interval x2 = b[1];
  return Interval(q.q0) + Interval(q.q1) * x1 + Interval(q.q2) * x2 +
         Interval(q.q3) * sqr(x1) + Interval(q.q4) * (x1 * x2) +
         Interval(q.q5) * sqr(x2);
}

bool is_ellipse(const QuadraticForm& q) {
  return q.q3 > 0 && 4 * q.q3 * q.q5 - q.q4 * q.q4 > 0;
}

QuadraticForm apply_param_symmetry(const SignedPerm& s, const QuadraticForm& q) {
  if (s.size() != 6)
    throw std::invalid_argument("apply_param_symmetry: expects a symmetry of length 6");
  return QuadraticForm::from_coeffs(s.apply(q.coeffs()));
}

SignedPerm swap_param_symmetry() { return SignedPerm({1, 3, 2, 6, 5, 4}); }

QuadraticForm from_foci(const Foci& f) {
  const double a1 = f.a[0], a2 = f.a[1];
  const double b1 = f.b[0], b2 = f.b[1];
  const double l = f.ell;
  const double focal = std::hypot(a1 - b1, a2 - b2);
  if (!(l > focal))
    throw DegenerateEllipseError("degenerate ellipse: distance-sum bound must exceed the focal distance");

  const auto p2 = [](double v) { return v * v; };
  const auto p3 = [](double v) { return v * v * v; };
  const auto p4 = [](double v) { return (v * v) * (v * v); };

  QuadraticForm q;
  q.q0 = -p4(a1) - 2 * p2(a1) * p2(a2) + 2 * p2(a1) * p2(b1) + 2 * p2(a1) * p2(b2) +
         2 * p2(a1) * p2(l) - p4(a2) + 2 * p2(a2) * p2(b1) + 2 * p2(a2) * p2(b2) +
         2 * p2(a2) * p2(l) - p4(b1) - 2 * p2(b1) * p2(b2) + 2 * p2(b1) * p2(l) -
         p4(b2) + 2 * p2(b2) * p2(l) - p4(l);
  q.q1 = 4 * p3(a1) - 4 * p2(a1) * b1 + 4 * a1 * p2(a2) - 4 * a1 * p2(b1) -
         4 * a1 * p2(b2) - 4 * a1 * p2(l) - 4 * p2(a2) * b1 + 4 * p3(b1) +
         4 * b1 * p2(b2) - 4 * b1 * p2(l);
  q.q2 = 4 * p2(a1) * a2 - 4 * p2(a1) * b2 + 4 * p3(a2) - 4 * p2(a2) * b2 -
         4 * a2 * p2(b1) - 4 * a2 * p2(b2) - 4 * a2 * p2(l) + 4 * p2(b1) * b2 +
         4 * p3(b2) - 4 * b2 * p2(l);
  q.q3 = -4 * p2(a1) + 8 * a1 * b1 - 4 * p2(b1) + 4 * p2(l);
  q.q4 = -8 * a1 * a2 + 8 * a1 * b2 + 8 * a2 * b1 - 8 * b1 * b2;
  q.q5 = -4 * p2(a2) + 8 * a2 * b2 - 4 * p2(b2) + 4 * p2(l);

  // The foci midpoint is interior, so the coefficient block must orient the
  // interior negative; a positive value means a transcription fault.
  const Point mid{0.5 * (a1 + b1), 0.5 * (a2 + b2)};
  if (eval(q, mid) > 0)
    throw std::logic_error("from_foci: interior orientation check failed");
  return q;
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& q) {
  return os << '(' << q.q0 << ',' << q.q1 << ',' << q.q2 << ',' << q.q3 << ','
            << q.q4 << ',' << q.q5 << ')';
}

}  // namespace ellsep
