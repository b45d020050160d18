#pragma once

#include <array>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "ellsep/interval.hpp"

namespace ellsep {

using Point = std::array<double, 2>;

// Axis-aligned product of intervals, dimension >= 1. A box with any empty
// component is the empty set; it is normalized so that all components are
// empty while the dimension is preserved.
class Box {
 public:
  explicit Box(std::vector<Interval> components);
  Box(const Interval& x1, const Interval& x2);

  static Box empty(int dim);

  int dim() const { return static_cast<int>(comps_.size()); }
  bool is_empty() const { return comps_[0].is_empty(); }
  const Interval& operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
  const std::vector<Interval>& components() const { return comps_; }

  // Maximum component width; 0 for the empty box.
  double width() const;
  // Index of the widest component, lowest index on ties.
  int widest_axis() const;

  std::vector<double> mid() const;
  bool contains(std::span<const double> p) const;

  friend bool operator==(const Box& a, const Box& b);
  friend bool operator!=(const Box& a, const Box& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<Interval> comps_;
};

Box intersect(const Box& a, const Box& b);
Box hull(const Box& a, const Box& b);

// Splits at the midpoint of the widest component (ties: lowest index).
// The halves cover the box and overlap only on the splitting hyperplane.
std::pair<Box, Box> bisect(const Box& a);

std::ostream& operator<<(std::ostream& os, const Box& b);

}  // namespace ellsep
