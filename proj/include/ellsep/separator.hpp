#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ellsep/box.hpp"
#include "ellsep/ellipse.hpp"
#include "ellsep/quadratic_form.hpp"

namespace ellsep {

// A separator splits a box into a part proven inside a set and a part proven
// outside, keeping the boundary in both (see SepResult). Implementations are
// immutable after construction and applications are pure.
class Separator {
 public:
  virtual ~Separator() = default;
  virtual SepResult separate(const Box& x) const = 0;
  virtual std::string label() const = 0;
};

using SeparatorPtr = std::shared_ptr<const Separator>;

// Minimal separator for the filled ellipse {f(q,.) <= 0}.
SeparatorPtr make_ellipse_separator(const QuadraticForm& q);

// Baseline separator for the same set, built from one-pass forward-backward
// contractions of f(q,x) <= 0 and f(q,x) >= 0.
SeparatorPtr make_fwdbwd_separator(const QuadraticForm& q);

// Swaps x_in and x_out of every application; separates the complement set.
SeparatorPtr make_complement(SeparatorPtr s);

// Separator for the intersection of the members' sets: x_out is the
// intersection of the members' x_out, x_in the hull of their x_in.
SeparatorPtr make_intersection(std::vector<SeparatorPtr> members);

// One-pass forward-backward contraction of the constraint f(q,x) in bound.
// Sound: no point of x with f(q,x) in bound is removed. No fixed-point
// iteration; square roots of squared subterms take both signs.
Box fwd_bwd_contract(const QuadraticForm& q, const Interval& bound, const Box& x);

}  // namespace ellsep
