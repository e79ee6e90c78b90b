#ifndef HKSIG_ERRORS_HPP
#define HKSIG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hksig {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Operands live in different rings (modulus, arity or order mismatch).
struct ArityError : Error {
  explicit ArityError(const std::string& msg) : Error(msg) {}
};

// An exponent left the representable range.
struct OverflowError : Error {
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A counting or enumeration step exceeded its configured guard.
struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

// An ideal expected to have finite colength does not.
struct NotZeroDimensional : Error {
  explicit NotZeroDimensional(const std::string& msg) : Error(msg) {}
};

// A claimed system of parameters is not one.
struct NotSOP : Error {
  explicit NotSOP(const std::string& msg) : Error(msg) {}
};

// Containment precondition between ideals failed.
struct NotNested : Error {
  explicit NotNested(const std::string& msg) : Error(msg) {}
};

// Invariant violated inside the library itself.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace hksig

#endif
