#pragma once

#include <array>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "ellsep/box.hpp"

namespace ellsep {

// Element of the hyperoctahedral group B_n in Cauchy one-line notation:
// the entry at position i (1-based) is a signed source index s*j, meaning
// output component i equals s * input component j. For example
// (-2,1,5,-4,3) maps (x1,...,x5) to (-x2,x1,x5,-x4,x3).
class SignedPerm {
 public:
  explicit SignedPerm(std::vector<int> entries);

  static SignedPerm identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  // True when every entry keeps its own index (pure sign flips).
  bool is_diagonal() const;

  SignedPerm inverse() const;

  std::vector<double> apply(std::span<const double> x) const;

  template <std::size_t N>
  std::array<double, N> apply(const std::array<double, N>& x) const {
    if (size() != static_cast<int>(N))
      throw std::invalid_argument("SignedPerm: length mismatch");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
      const int e = entries_[i];
      out[i] = e > 0 ? x[static_cast<size_t>(e - 1)] : -x[static_cast<size_t>(-e - 1)];
    }
    return out;
  }

  // Image box under the linear map; exact, since sign flips only swap
  // endpoints and the permutation reorders components.
  Box apply(const Box& b) const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) = default;

 private:
  std::vector<int> entries_;
};

// Composition in function order: apply(compose(p,q), x) = apply(p, apply(q, x)).
SignedPerm compose(const SignedPerm& p, const SignedPerm& q);

// Maps a diagonal plane symmetry eps = (e1*1, e2*2) to its conjugate
// parameter symmetry (1, 2*e1, 3*e2, 4, 5*e1*e2, 6): applying the result to
// the six quadratic coefficients equals composing the form with eps.
SignedPerm choice_function(const SignedPerm& eps);

using Contractor = std::function<Box(const Box&)>;

// Conjugated contractor [x] -> eps(C(eps^-1([x]))); contracts with respect
// to the image of C's target set under eps.
Contractor act_on_contractor(const SignedPerm& eps, Contractor contractor);

std::ostream& operator<<(std::ostream& os, const SignedPerm& p);

}  // namespace ellsep
