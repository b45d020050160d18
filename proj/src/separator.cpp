#include "ellsep/separator.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace ellsep {

namespace {

// Backward step through v = sqr(u): u is narrowed to both sign branches of
// the square root of v's non-negative part.
Interval back_sqr(const Interval& v, const Interval& u) {
  const Interval root = sqrt(v);
  return hull(intersect(u, root), intersect(u, -root));
}

class EllipseSeparator final : public Separator {
 public:
  explicit EllipseSeparator(const QuadraticForm& q) : ellipse_(q) {}

  SepResult separate(const Box& x) const override { return ellipse_.separate(x); }

  std::string label() const override {
    std::ostringstream os;
    os << "ellipse" << ellipse_.coefficients();
    return os.str();
  }

 private:
  Ellipse ellipse_;
};

class FwdBwdSeparator final : public Separator {
 public:
  explicit FwdBwdSeparator(const QuadraticForm& q) : q_(q) {}

  SepResult separate(const Box& x) const override {
    return {fwd_bwd_contract(q_, Interval::nonnegative(), x),
            fwd_bwd_contract(q_, Interval::nonpositive(), x)};
  }

  std::string label() const override {
    std::ostringstream os;
    os << "fwdbwd" << q_;
    return os.str();
  }

 private:
  QuadraticForm q_;
};

class ComplementSeparator final : public Separator {
 public:
  explicit ComplementSeparator(SeparatorPtr inner) : inner_(std::move(inner)) {
    if (!inner_) throw std::invalid_argument("complement: null separator");
  }

  SepResult separate(const Box& x) const override {
    SepResult r = inner_->separate(x);
    return {std::move(r.x_out), std::move(r.x_in)};
  }

  std::string label() const override { return "not(" + inner_->label() + ")"; }

 private:
  SeparatorPtr inner_;
};

class IntersectionSeparator final : public Separator {
 public:
  explicit IntersectionSeparator(std::vector<SeparatorPtr> members)
      : members_(std::move(members)) {
    if (members_.empty())
      throw std::invalid_argument("intersection: needs at least one separator");
    for (const auto& m : members_)
      if (!m) throw std::invalid_argument("intersection: null separator");
  }

  SepResult separate(const Box& x) const override {
    Box x_out = x;
    Box x_in = Box::empty(x.dim());
    for (const auto& m : members_) {
      const SepResult r = m->separate(x);
      x_out = intersect(x_out, r.x_out);
      x_in = hull(x_in, r.x_in);
    }
    return {std::move(x_in), std::move(x_out)};
  }

  std::string label() const override {
    std::string s = "and(";
    for (size_t i = 0; i < members_.size(); ++i) {
      if (i > 0) s += ", ";
      s += members_[i]->label();
    }
    return s + ")";
  }

 private:
  std::vector<SeparatorPtr> members_;
};

}  // namespace

SeparatorPtr make_ellipse_separator(const QuadraticForm& q) {
  return std::make_shared<EllipseSeparator>(q);
}

SeparatorPtr make_fwdbwd_separator(const QuadraticForm& q) {
  return std::make_shared<FwdBwdSeparator>(q);
}

SeparatorPtr make_complement(SeparatorPtr s) {
  return std::make_shared<ComplementSeparator>(std::move(s));
}

SeparatorPtr make_intersection(std::vector<SeparatorPtr> members) {
  return std::make_shared<IntersectionSeparator>(std::move(members));
}

Box fwd_bwd_contract(const QuadraticForm& q, const Interval& bound, const Box& x) {
  if (x.dim() != 2)
    throw std::invalid_argument("fwd_bwd_contract: box must be 2-dimensional");
  if (x.is_empty() || bound.is_empty()) return Box::empty(2);

  Interval x1 = x[0];
  Interval x2 = x[1];
  const Interval k0(q.q0), k1(q.q1), k2(q.q2), k3(q.q3), k4(q.q4), k5(q.q5);

  // Forward sweep through
  //   ((q0 + q1*x1) + q2*x2) + ((q3*x1^2 + q4*(x1*x2)) + q5*x2^2).
  const Interval a = k1 * x1;
  const Interval b = k0 + a;
  const Interval c = k2 * x2;
  const Interval d = b + c;
  const Interval e = sqr(x1);
  const Interval f = k3 * e;
  const Interval g = x1 * x2;
  const Interval h = k4 * g;
  const Interval i = sqr(x2);
  const Interval j = k5 * i;
  const Interval k = f + h;
  const Interval l = k + j;
  const Interval root = intersect(d + l, bound);
  if (root.is_empty()) return Box::empty(2);

  // Backward sweep, single pass, re-narrowing through each subterm.
  // Divisions by coefficient intervals containing zero yield the entire
  // line and leave the operand unchanged.
  const Interval d2 = intersect(d, root - l);
  const Interval l2 = intersect(l, root - d2);
  if (d2.is_empty() || l2.is_empty()) return Box::empty(2);

  const Interval k2n = intersect(k, l2 - j);
  const Interval j2 = intersect(j, l2 - k2n);
  if (k2n.is_empty() || j2.is_empty()) return Box::empty(2);

  const Interval f2 = intersect(f, k2n - h);
  const Interval h2 = intersect(h, k2n - f2);
  if (f2.is_empty() || h2.is_empty()) return Box::empty(2);

  const Interval i2 = intersect(i, j2 / k5);
  if (i2.is_empty()) return Box::empty(2);
  x2 = back_sqr(i2, x2);
  if (x2.is_empty()) return Box::empty(2);

  const Interval g2 = intersect(g, h2 / k4);
  if (g2.is_empty()) return Box::empty(2);
  x1 = intersect(x1, g2 / x2);
  if (x1.is_empty()) return Box::empty(2);
  x2 = intersect(x2, g2 / x1);
  if (x2.is_empty()) return Box::empty(2);

  const Interval e2 = intersect(e, f2 / k3);
  if (e2.is_empty()) return Box::empty(2);
  x1 = back_sqr(e2, x1);
  if (x1.is_empty()) return Box::empty(2);

  const Interval b2 = intersect(b, d2 - c);
  const Interval c2 = intersect(c, d2 - b2);
  if (b2.is_empty() || c2.is_empty()) return Box::empty(2);
  x2 = intersect(x2, c2 / k2);
  if (x2.is_empty()) return Box::empty(2);

  const Interval a2 = intersect(a, b2 - k0);
  if (a2.is_empty()) return Box::empty(2);
  x1 = intersect(x1, a2 / k1);
  if (x1.is_empty()) return Box::empty(2);

  return Box(x1, x2);
}

}  // namespace ellsep
