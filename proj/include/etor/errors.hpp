#pragma once

#include <stdexcept>
#include <string>

namespace etor {

/// Precondition on an input value failed (bad order, zero where nonzero required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The curve has zero discriminant.
class SingularCurve : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A point was handed to the group law for a curve it does not lie on.
class OffCurvePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Trial division stopped with an unfactored cofactor.
class FactorizationIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tabulated formula failed its own consistency check. Signals a transcription
/// bug, never a property of the input data.
class TranscriptionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace etor
