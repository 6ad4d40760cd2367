#pragma once

#include <stdexcept>
#include <string>

namespace mustafin {

// Each failure class maps onto one C status code (see mustafin.h).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed into a configuration or vector.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Vector or matrix lengths disagree with the ambient dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A point lies outside the domain of the operation (e.g. not in the hull).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mustafin
