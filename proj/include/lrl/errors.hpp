#pragma once

#include <stdexcept>

namespace lrl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// Requested a landscape computation on an operator whose potential fails the
// dominance condition, without an explicit override.
struct ConditionViolated : Error {
  using Error::Error;
};

// The computed contraction factor ||V^-1|| * ||H0|| reached 1, so the power
// series has no convergence certificate.
struct ContractionFailure : Error {
  using Error::Error;
};

// An eigenvalue <= 0 appeared in a regime where the spectrum is guaranteed
// positive; indicates a solver bug or a misclassified operator.
struct NonPositiveSpectrum : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

// Configuration file problems (CLI maps these to exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

// An internal cross-check that is mathematically guaranteed failed anyway.
struct CheckFailed : Error {
  using Error::Error;
};

}  // namespace lrl
