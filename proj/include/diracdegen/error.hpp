#pragma once

#include <stdexcept>
#include <string>

namespace diracdegen {

// Base class for every error raised by the library. The C API maps each
// subclass onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed parameter or precondition violation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Non-finite intermediate, or a point outside the overflow-guarded region.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Expression text that does not parse.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The bilinear used as a denominator vanished at the evaluation point.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

// |E - V0| >= m: momentum inside the barrier is real, so there is no decay factor.
class EvanescenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace diracdegen
