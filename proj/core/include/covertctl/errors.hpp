#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace covertctl {

/// Base class for all library errors. Subclasses map onto the CLI exit-code
/// contract: validation errors exit 2, numerical failures exit 3, design
/// budget exhaustion exits 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed inputs: bad dimensions, out-of-range indices, violated
/// preconditions, unparseable files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Stacked I/O window shorter than the state dimension.
class WindowTooSmallError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Secure-channel requirements (one secure input, two secure outputs) not met.
class AssumptionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Attack synthesis requested for a scenario that fails the feasibility test.
/// Carries the first output whose finite relative degree is not covered by a
/// compromised sensor, when one exists.
class FeasibilityError : public ValidationError {
 public:
  FeasibilityError(const std::string& what, std::optional<int> witness_output)
      : ValidationError(what), witness_output(witness_output) {}
  std::optional<int> witness_output;
};

/// The threat's attack channels never reach any output (all relative degrees
/// infinite); coding-scheme design is vacuous.
class DegenerateThreatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Numerical failures: singular matrices, ill-conditioning, failed
/// factorizations.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The stacked output-zeroing map has a trivial null space over the requested
/// horizon. Inconclusive: a designed attack may still exist at a longer
/// horizon.
class NoDesignedAttackError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Decoder design exhausted its candidate budget. Carries the condition that
/// rejected the most candidates.
class DesignFailureError : public Error {
 public:
  DesignFailureError(const std::string& what, std::string blocking_condition)
      : Error(what), blocking_condition(std::move(blocking_condition)) {}
  std::string blocking_condition;
};

}  // namespace covertctl
