#include "ellsep/signed_perm.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

namespace ellsep {

SignedPerm::SignedPerm(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("SignedPerm: length must be >= 1");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (const int e : entries_) {
    const int j = std::abs(e);
    if (j < 1 || j > n || seen[static_cast<size_t>(j - 1)])
      throw std::invalid_argument("SignedPerm: entries must be a signed permutation of 1..n");
    seen[static_cast<size_t>(j - 1)] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return SignedPerm(std::move(e));
}

bool SignedPerm::is_diagonal() const {
  for (int i = 0; i < size(); ++i)
    if (std::abs(entries_[static_cast<size_t>(i)]) != i + 1) return false;
  return true;
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 0; i < size(); ++i) {
    const int e = entries_[static_cast<size_t>(i)];
    const int j = std::abs(e);
    inv[static_cast<size_t>(j - 1)] = e > 0 ? i + 1 : -(i + 1);
  }
  return SignedPerm(std::move(inv));
}

std::vector<double> SignedPerm::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != size())
    throw std::invalid_argument("SignedPerm: length mismatch");
  std::vector<double> out(x.size());
  for (int i = 0; i < size(); ++i) {
    const int e = entries_[static_cast<size_t>(i)];
    out[static_cast<size_t>(i)] =
        e > 0 ? x[static_cast<size_t>(e - 1)] : -x[static_cast<size_t>(-e - 1)];
  }
  return out;
}

Box SignedPerm::apply(const Box& b) const {
  if (b.dim() != size()) throw std::invalid_argument("SignedPerm: dimension mismatch");
  if (b.is_empty()) return Box::empty(size());
  std::vector<Interval> out;
  out.reserve(static_cast<size_t>(size()));
  for (int i = 0; i < size(); ++i) {
    const int e = entries_[static_cast<size_t>(i)];
    out.push_back(e > 0 ? b[e - 1] : -b[-e - 1]);
  }
  return Box(std::move(out));
}

SignedPerm compose(const SignedPerm& p, const SignedPerm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: length mismatch");
  std::vector<int> out(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    const int e = p.entries()[static_cast<size_t>(i)];
    const int inner = q.entries()[static_cast<size_t>(std::abs(e) - 1)];
    out[static_cast<size_t>(i)] = e > 0 ? inner : -inner;
  }
  return SignedPerm(std::move(out));
}

SignedPerm choice_function(const SignedPerm& eps) {
  if (eps.size() != 2 || !eps.is_diagonal())
    throw std::invalid_argument("choice_function: expects a diagonal symmetry of the plane");
  const int e1 = eps.entries()[0] > 0 ? 1 : -1;
  const int e2 = eps.entries()[1] > 0 ? 1 : -1;
  return SignedPerm({1, 2 * e1, 3 * e2, 4, 5 * e1 * e2, 6});
}

Contractor act_on_contractor(const SignedPerm& eps, Contractor contractor) {
  SignedPerm inv = eps.inverse();
  return [eps, inv = std::move(inv), c = std::move(contractor)](const Box& x) {
    if (x.dim() != eps.size())
      throw std::invalid_argument("act_on_contractor: dimension mismatch");
    return eps.apply(c(inv.apply(x)));
  };
}

std::ostream& operator<<(std::ostream& os, const SignedPerm& p) {
  os << '(';
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) os << ',';
    os << p.entries()[static_cast<size_t>(i)];
  }
  return os << ')';
}

}  // namespace ellsep
