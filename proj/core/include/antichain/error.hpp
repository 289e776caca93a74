#pragma once

#include <stdexcept>
#include <string>

namespace antichain {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace antichain
