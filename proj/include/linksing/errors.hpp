#pragma once

#include <stdexcept>
#include <string>

namespace linksing {

/// No exact quotient exists; signals an upstream formula error.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input is not in the span of the requested basis (q -> -1/q symmetry fails).
struct NotRepresentable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A series did not settle to a polynomial below its truncation order.
struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generators with gcd > 1: the complement in N is infinite.
struct NotCofinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Valuation data could not be certified below the truncation order.
struct TruncationTooLow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A shifted module fails the required containment i + D <= G.
struct NotContained : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCoprime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Odd q-powers survive a normalization that should kill them.
struct ParityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace linksing
