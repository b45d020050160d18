#pragma once

// Closed real intervals with binary64 endpoints and outward rounding.
//
// Every operation returns an interval enclosing the exact real range over
// its operands. Endpoints are computed in round-to-nearest and stepped one
// ulp outward unless an error-free residual (2Sum for sums, FMA for
// products) certifies the computed endpoint already lies on the safe side.
// No rounding-mode switching, so values are safe to share across threads.
//
// Empty is a distinct normalized state (canonically [+inf,-inf], never
// produced by endpoint arithmetic) and no NaN endpoint is ever stored.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ellsep {

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kMaxFinite = std::numeric_limits<double>::max();

// Below this magnitude the FMA residual of a product can underflow and lose
// its sign, so exactness cannot be certified; round outward instead.
inline constexpr double kResidualGuard = 0x1p-969;

inline double prev_float(double x) { return std::nextafter(x, -kInf); }
inline double next_float(double x) { return std::nextafter(x, kInf); }

// Directed sums. The 2Sum residual is exact in binary64 whenever the sum is
// finite, so the nearest sum is kept when it is already a valid bound.
inline double add_down(double x, double y) {
  const double s = x + y;
  if (std::isinf(s)) return s > 0 ? kMaxFinite : s;
  const double t = s - x;
  const double err = (x - (s - t)) + (y - t);
  return err < 0 ? prev_float(s) : s;
}

inline double add_up(double x, double y) {
  const double s = x + y;
  if (std::isinf(s)) return s < 0 ? -kMaxFinite : s;
  const double t = s - x;
  const double err = (x - (s - t)) + (y - t);
  return err > 0 ? next_float(s) : s;
}

inline double sub_down(double x, double y) { return add_down(x, -y); }
inline double sub_up(double x, double y) { return add_up(x, -y); }

// Directed products. A zero factor yields exactly zero, which also settles
// the 0 * inf endpoint combinations soundly (the interval holds only reals).
inline double mul_down(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  const double p = x * y;
  if (std::isinf(p)) return p > 0 ? kMaxFinite : p;
  const double err = std::fma(x, y, -p);
  if (err < 0) return prev_float(p);
  if (err == 0 && std::fabs(p) < kResidualGuard) return prev_float(p);
  return p;
}

inline double mul_up(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  const double p = x * y;
  if (std::isinf(p)) return p < 0 ? -kMaxFinite : p;
  const double err = std::fma(x, y, -p);
  if (err > 0) return next_float(p);
  if (err == 0 && std::fabs(p) < kResidualGuard) return next_float(p);
  return p;
}

// Directed quotients; the residual q*y - x has the sign of (q - x/y)*y.
// Callers never divide by zero and only pair an infinite divisor with a
// quotient whose zero limit is a valid bound in the requested direction.
inline double div_down(double x, double y) {
  if (x == 0.0) return 0.0;
  const double q = x / y;
  if (std::isinf(q)) return q > 0 ? kMaxFinite : q;
  if (std::isinf(x)) return q;
  if (std::isinf(y)) return q;
  const double r = std::fma(q, y, -x);
  if ((y > 0 && r > 0) || (y < 0 && r < 0)) return prev_float(q);
  if (r == 0 && std::fabs(x) < kResidualGuard) return prev_float(q);
  return q;
}

inline double div_up(double x, double y) {
  if (x == 0.0) return 0.0;
  const double q = x / y;
  if (std::isinf(q)) return q < 0 ? -kMaxFinite : q;
  if (std::isinf(x)) return q;
  if (std::isinf(y)) return q;
  const double r = std::fma(q, y, -x);
  if ((y > 0 && r < 0) || (y < 0 && r > 0)) return next_float(q);
  if (r == 0 && std::fabs(x) < kResidualGuard) return next_float(q);
  return q;
}

// Directed square roots for x >= 0. std::sqrt is correctly rounded, so the
// residual decides which side the nearest result landed on.
inline double sqrt_down(double x) {
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  const double s = std::sqrt(x);
  if (x < kResidualGuard) return prev_float(s);
  const double r = std::fma(s, s, -x);
  return r > 0 ? prev_float(s) : s;
}

inline double sqrt_up(double x) {
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  const double s = std::sqrt(x);
  if (x < kResidualGuard) return next_float(s);
  const double r = std::fma(s, s, -x);
  return r < 0 ? next_float(s) : s;
}

}  // namespace detail

class Interval {
 public:
  // Default-constructs the degenerate interval [0,0].
  Interval() : lo_(0.0), hi_(0.0) {}

  // Point interval [v,v]; v must be finite (an infinity is not a real).
  Interval(double v) : Interval(v, v) {}  // NOLINT: implicit by design

  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi))
      throw std::invalid_argument("Interval: NaN endpoint");
    if (!(lo <= hi))
      throw std::invalid_argument("Interval: lo > hi");
    if (lo == detail::kInf || hi == -detail::kInf)
      throw std::invalid_argument("Interval: contains no real");
  }

  static Interval empty() { return Interval(empty_tag{}); }
  static Interval entire() { return Interval(-detail::kInf, detail::kInf); }
  static Interval nonnegative() { return Interval(0.0, detail::kInf); }
  static Interval nonpositive() { return Interval(-detail::kInf, 0.0); }

  bool is_empty() const { return lo_ > hi_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  bool contains(double v) const { return lo_ <= v && v <= hi_; }
  bool subset_of(const Interval& other) const {
    return is_empty() || (other.lo_ <= lo_ && hi_ <= other.hi_);
  }

  double width() const { return is_empty() ? 0.0 : hi_ - lo_; }

  // Largest endpoint magnitude; 0 for empty.
  double mag() const {
    return is_empty() ? 0.0 : std::max(std::fabs(lo_), std::fabs(hi_));
  }

  // A finite representative inside the interval.
  double mid() const {
    if (is_empty()) return std::numeric_limits<double>::quiet_NaN();
    if (lo_ == -detail::kInf && hi_ == detail::kInf) return 0.0;
    if (lo_ == -detail::kInf) return std::min(hi_, -detail::kMaxFinite);
    if (hi_ == detail::kInf) return std::max(lo_, detail::kMaxFinite);
    double m = 0.5 * (lo_ + hi_);
    if (!std::isfinite(m)) m = 0.5 * lo_ + 0.5 * hi_;
    return std::min(std::max(m, lo_), hi_);
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) {
    return !(a == b);
  }

 private:
  struct empty_tag {};
  explicit Interval(empty_tag) : lo_(detail::kInf), hi_(-detail::kInf) {}

  double lo_;
  double hi_;
};

inline Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval(detail::add_down(a.lo(), b.lo()),
                  detail::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  return Interval(-a.hi(), -a.lo());
}

inline Interval operator-(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval(detail::sub_down(a.lo(), b.hi()),
                  detail::sub_up(a.hi(), b.lo()));
}

inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  using detail::mul_down;
  using detail::mul_up;
  const double lo =
      std::min(std::min(mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi())),
               std::min(mul_down(a.hi(), b.lo()), mul_down(a.hi(), b.hi())));
  const double hi =
      std::max(std::max(mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi())),
               std::max(mul_up(a.hi(), b.lo()), mul_up(a.hi(), b.hi())));
  return Interval(lo, hi);
}

// Quotient enclosure. A divisor interval containing zero yields the entire
// line: sound, and a no-op for the backward contraction steps that use it.
inline Interval operator/(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  if (b.contains(0.0)) return Interval::entire();
  if (b.hi() < 0) return -(a / -b);
  // b.lo() > 0 here, hence finite.
  const double lo = a.lo() >= 0 ? detail::div_down(a.lo(), b.hi())
                                : detail::div_down(a.lo(), b.lo());
  const double hi = a.hi() >= 0 ? detail::div_up(a.hi(), b.lo())
                                : detail::div_up(a.hi(), b.hi());
  return Interval(lo, hi);
}

inline Interval sqr(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  using detail::mul_down;
  using detail::mul_up;
  if (a.lo() >= 0)
    return Interval(mul_down(a.lo(), a.lo()), mul_up(a.hi(), a.hi()));
  if (a.hi() <= 0)
    return Interval(mul_down(a.hi(), a.hi()), mul_up(a.lo(), a.lo()));
  return Interval(0.0, std::max(mul_up(a.lo(), a.lo()), mul_up(a.hi(), a.hi())));
}

// Encloses {sqrt(x) : x in a, x >= 0}; empty when a has no non-negative part.
inline Interval sqrt(const Interval& a) {
  if (a.is_empty() || a.hi() < 0) return Interval::empty();
  const double lo = a.lo() <= 0 ? 0.0 : detail::sqrt_down(a.lo());
  return Interval(lo, detail::sqrt_up(a.hi()));
}

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi || lo == detail::kInf || hi == -detail::kInf)
    return Interval::empty();
  return Interval(lo, hi);
}

inline Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
  if (a.is_empty()) return os << "[empty]";
  return os << '[' << a.lo() << ',' << a.hi() << ']';
}

}  // namespace ellsep
