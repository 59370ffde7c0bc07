#pragma once

#include <stdexcept>
#include <string>

namespace thetakit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Weight or matrix dimensions do not agree.
struct DimensionError : Error {
  using Error::Error;
};

/// Elements from different algebra contexts were combined.
struct ContextError : Error {
  using Error::Error;
};

/// A structural invariant (antisymmetry, canonical form, ...) was violated.
struct InvariantViolation : Error {
  using Error::Error;
};

/// A degree bound is too small for the requested computation.
struct BoundError : Error {
  using Error::Error;
};

/// The restricted Haar functional was applied outside its supported domain.
struct UnsupportedDegree : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace thetakit
