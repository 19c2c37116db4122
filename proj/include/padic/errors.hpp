#pragma once

#include <stdexcept>
#include <string>

#include "padic/extended_int.hpp"

namespace padic {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input (bad prime, context/dimension mismatch, parse failures).
class InvalidInput : public Error {
public:
  using Error::Error;
};

// Division by zero or by a value with no certified digits.
class ArithmeticError : public Error {
public:
  using Error::Error;
};

// The series parameter lies outside the certified convergence ball.
class DomainError : public Error {
public:
  using Error::Error;
};

// A requested certificate exceeds what the working precision can deliver.
class PrecisionError : public Error {
public:
  PrecisionError(const std::string& what, ExtInt achievable)
      : Error(what + " (achievable exponent " + achievable.to_string() + ")"),
        achievable_(achievable) {}

  ExtInt achievable() const { return achievable_; }

private:
  ExtInt achievable_;
};

// Two independently computed forms of the same quantity disagree beyond their
// certificates. This is an implementation fault, never a property of the input.
class EngineFault : public Error {
public:
  using Error::Error;
};

} // namespace padic
