#pragma once

#include <stdexcept>

namespace ellsep {

// The quadratic part fails the positive-definiteness predicate.
struct NotAnEllipseError : std::domain_error {
  using std::domain_error::domain_error;
};

// Positive-definite quadratic part, but the sublevel set is empty.
struct EmptyEllipseError : std::domain_error {
  using std::domain_error::domain_error;
};

// Ordinate outside the feasible band of the boundary arc.
struct InfeasibleOrdinateError : std::domain_error {
  using std::domain_error::domain_error;
};

// Distance-sum bound does not exceed the focal distance.
struct DegenerateEllipseError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed configuration or flag values (usage-level failure).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ellsep
