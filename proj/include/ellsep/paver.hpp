#pragma once

#include <cstdint>
#include <vector>

#include "ellsep/box.hpp"
#include "ellsep/separator.hpp"

namespace ellsep {

// Classified box collection covering a frame box: inside and outside boxes
// are proven, undetermined boxes are thinner than the width threshold eps.
// Box interiors are pairwise disjoint and the union covers the frame. List
// order is the paver's canonical (deterministic) production order.
struct Paving {
  Box frame;
  double eps = 0;
  std::vector<Box> inside;
  std::vector<Box> outside;
  std::vector<Box> undetermined;
  struct Stats {
    std::int64_t bisections = 0;
    std::int64_t separator_calls = 0;
    friend bool operator==(const Stats&, const Stats&) = default;
  } stats;

  std::size_t box_count() const {
    return inside.size() + outside.size() + undetermined.size();
  }
};

// Depth-first SIVIA over a worklist: each popped box is separated, the
// proven slabs are emitted, and the undetermined residual is bisected at
// the midpoint of its widest axis until its width drops below eps.
Paving pave(const Separator& s, const Box& frame, double eps);

// Guaranteed area bracket for (set ∩ frame): the inside sum is rounded down,
// the inside+undetermined sum rounded up.
struct AreaBracket {
  double inner = 0;
  double inner_plus_undetermined = 0;
};

AreaBracket paving_areas(const Paving& p);

}  // namespace ellsep
