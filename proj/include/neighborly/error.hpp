#pragma once

#include <stdexcept>
#include <string>

namespace neighborly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Label sequence of odd length, fewer than two diameters, or a bad parse.
class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

/// A reduction step would leave fewer than two diameters.
class DegenerateDiagram : public Error {
 public:
  using Error::Error;
};

/// Precondition of a diagram move (displace) does not hold.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

/// Diagram exceeds the size guard of the geometric oracle.
class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain of a formula or search.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed form that must divide exactly did not.
class InexactDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact integer result does not fit the 64-bit result type.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// A search disagreed with a closed form or a safety assertion tripped.
/// `witness()` carries the serialized offending diagram (may be empty).
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace neighborly
