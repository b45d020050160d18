#include "ellsep/box.hpp"

#include <stdexcept>

namespace ellsep {

Box::Box(std::vector<Interval> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("Box: dimension must be >= 1");
  normalize();
}

Box::Box(const Interval& x1, const Interval& x2) : comps_{x1, x2} { normalize(); }

Box Box::empty(int dim) {
  if (dim < 1) throw std::invalid_argument("Box: dimension must be >= 1");
  return Box(std::vector<Interval>(static_cast<size_t>(dim), Interval::empty()));
}

void Box::normalize() {
  for (const Interval& c : comps_) {
    if (c.is_empty()) {
      for (Interval& d : comps_) d = Interval::empty();
      return;
    }
  }
}

double Box::width() const {
  if (is_empty()) return 0.0;
  double w = 0.0;
  for (const Interval& c : comps_) w = std::max(w, c.width());
  return w;
}

int Box::widest_axis() const {
  int axis = 0;
  double w = comps_[0].width();
  for (int i = 1; i < dim(); ++i) {
    if (comps_[static_cast<size_t>(i)].width() > w) {
      w = comps_[static_cast<size_t>(i)].width();
      axis = i;
    }
  }
  return axis;
}

std::vector<double> Box::mid() const {
  std::vector<double> m;
  m.reserve(comps_.size());
  for (const Interval& c : comps_) m.push_back(c.mid());
  return m;
}

bool Box::contains(std::span<const double> p) const {
  if (static_cast<int>(p.size()) != dim())
    throw std::invalid_argument("Box::contains: dimension mismatch");
  if (is_empty()) return false;
  for (int i = 0; i < dim(); ++i)
    if (!comps_[static_cast<size_t>(i)].contains(p[static_cast<size_t>(i)])) return false;
  return true;
}

bool operator==(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  return a.comps_ == b.comps_;
}

Box intersect(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<Interval> out;
  out.reserve(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) out.push_back(intersect(a[i], b[i]));
  return Box(std::move(out));
}

Box hull(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hull: dimension mismatch");
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  std::vector<Interval> out;
  out.reserve(static_cast<size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) out.push_back(hull(a[i], b[i]));
  return Box(std::move(out));
}

std::pair<Box, Box> bisect(const Box& a) {
  if (a.is_empty() || a.width() <= 0)
    throw std::invalid_argument("bisect: box must be non-empty with positive width");
  const int axis = a.widest_axis();
  const Interval& c = a[axis];
  const double m = c.mid();
  std::vector<Interval> lo = a.components();
  std::vector<Interval> hi = a.components();
  lo[static_cast<size_t>(axis)] = Interval(c.lo(), m);
  hi[static_cast<size_t>(axis)] = Interval(m, c.hi());
  return {Box(std::move(lo)), Box(std::move(hi))};
}

std::ostream& operator<<(std::ostream& os, const Box& b) {
  if (b.is_empty()) {
    os << "[empty]^" << b.dim();
    return os;
  }
  for (int i = 0; i < b.dim(); ++i) {
    if (i > 0) os << 'x';
    os << b[i];
  }
  return os;
}

}  // namespace ellsep
