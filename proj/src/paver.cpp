#include "ellsep/paver.hpp"

#include <cmath>
#include <stdexcept>

#include "ellsep/ellipse.hpp"

namespace ellsep {

Paving pave(const Separator& s, const Box& frame, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("pave: eps must be > 0");
  if (frame.is_empty()) throw std::invalid_argument("pave: frame must be non-empty");
  for (int i = 0; i < frame.dim(); ++i)
    if (std::isinf(frame[i].lo()) || std::isinf(frame[i].hi()))
      throw std::invalid_argument("pave: frame must be bounded");

  Paving p{frame, eps, {}, {}, {}, {}};
  std::vector<Box> work{frame};
  while (!work.empty()) {
    const Box x = work.back();
    work.pop_back();

    const SepResult r = s.separate(x);
    ++p.stats.separator_calls;
    for (const Box& slab : complement_slabs(x, r.x_out)) p.outside.push_back(slab);
    for (const Box& slab : complement_slabs(x, r.x_in)) p.inside.push_back(slab);

    const Box residual = intersect(r.x_in, r.x_out);
    if (residual.is_empty()) continue;
    const Interval& widest = residual[residual.widest_axis()];
    const double m = widest.mid();
    // stop when thin enough, or when the split point has hit the float grid
    if (residual.width() < eps || m <= widest.lo() || m >= widest.hi()) {
      p.undetermined.push_back(residual);
      continue;
    }
    auto [lower, upper] = bisect(residual);
    ++p.stats.bisections;
    work.push_back(std::move(lower));
    work.push_back(std::move(upper));
  }
  return p;
}

namespace {

Interval box_area(const Box& b) {
  Interval area(1.0);
  for (int i = 0; i < b.dim(); ++i)
    area = area * (Interval(b[i].hi()) - Interval(b[i].lo()));
  return area;
}

}  // namespace

AreaBracket paving_areas(const Paving& p) {
  Interval inner(0.0);
  for (const Box& b : p.inside) inner = inner + box_area(b);
  Interval upper = inner;
  for (const Box& b : p.undetermined) upper = upper + box_area(b);
  return {inner.lo(), upper.hi()};
}

}  // namespace ellsep
