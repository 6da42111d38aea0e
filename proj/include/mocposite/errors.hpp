#pragma once

#include <stdexcept>
#include <string>

namespace mocposite {

// Base class for everything the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (zero input to
// arg/log, point on or too close to a slit, non-finite component).
struct DomainError : Error {
  using Error::Error;
};

// Structurally invalid input: too few samples, non-unit tail, open path where
// a closed one is required, bad parameter counts.
struct UsageError : Error {
  using Error::Error;
};

// Geometric precondition violated: a path or probe loop grazes a slit or a
// reference point closer than the working clearance.
struct GeometryError : Error {
  using Error::Error;
};

// Continuation ran into a zero of g (a branch point of sqrt(g) or log(g)).
struct SingularityError : Error {
  using Error::Error;
};

// Adaptive refinement exceeded its depth budget; the path is treated as
// grazing a branch point.
struct StepError : Error {
  using Error::Error;
};

// Root selection could not be decided between the two sqrt candidates.
struct AmbiguityError : Error {
  using Error::Error;
};

// A quantity that must be structurally exact (integer monodromy offset,
// matching endpoints) failed its residual check.
struct ConsistencyError : Error {
  using Error::Error;
};

// Numerical range failure: magnitudes too small or too large for the
// double-precision evaluation path.
struct NumericError : Error {
  using Error::Error;
};

// Filesystem failure while reading inputs or writing reports and plots.
struct IoError : Error {
  using Error::Error;
};

}  // namespace mocposite
