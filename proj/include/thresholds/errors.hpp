#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thresholds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input or violated operation precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands live in different rings (variable count or coefficient field).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

// A configured computation cap was hit; the result would have been exact but
// was not computed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input is outside the catalog of families with a known closed form.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

// A test-ideal chain did not stabilize within the configured horizon.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

}  // namespace thresholds
