#pragma once

#include <stdexcept>
#include <string>

namespace queen3d {

/// Base type for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by formula-backed operations outside the proved regime
/// (n >= 5, n odd, 3 not dividing n).
struct NonGenericModulus : Error {
  explicit NonGenericModulus(long long n)
      : Error("n=" + std::to_string(n) +
              " is outside the generic odd regime: requires n >= 5 with n odd"
              " and 3 not dividing n") {}
};

/// Raised for orthogonality counts with no closed-form multiplicity.
struct UnsupportedMuValue : Error {
  explicit UnsupportedMuValue(int k)
      : Error("mu=" + std::to_string(k) +
              " has no multiplicity formula; supported values are 0,1,2,3,4,13") {}
};

/// Raised when a requested computation would exceed its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Raised when a direction pair has a rank-deficient kernel. Distinct
/// canonical directions always span rank 2, so this signals an internal bug.
struct DegenerateKernel : Error {
  using Error::Error;
};

/// Raised when a nonzero point with orthogonality count >= 2 lies on zero or
/// on several prototype lines. Never expected; a loud failure here means
/// either a broken invariant in this library or a counterexample to the line
/// classification.
struct ClassificationViolation : Error {
  using Error::Error;
};

}  // namespace queen3d
