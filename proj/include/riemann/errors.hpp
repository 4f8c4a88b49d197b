#pragma once

#include <stdexcept>
#include <string>

namespace riemann {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument sits on a pole (Gamma at non-positive integers, zeta at s = 1, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series, continued fraction or quadrature failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A value that must be real (or otherwise self-consistent) is not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Zero scan finished but the zero count disagrees with N(T).
class MissedZerosError : public Error {
 public:
  using Error::Error;
};

// Persisted data failed validation.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace riemann
