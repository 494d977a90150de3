#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smgkit {

// Base of everything thrown on purpose by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a documented precondition (bad matrix, non-group table,
// undefined generator target, ...). Always carries a witness in the message.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// A configured size cap was hit before the computation finished.
class CapExceededError : public Error {
public:
  CapExceededError(const std::string& what, std::size_t reached_)
      : Error(what), reached(reached_) {}
  std::size_t reached;
};

// Two independent computations of the same fact disagreed. This is a bug
// in the library or corrupted state, never a user error.
class ConsistencyError : public Error {
public:
  explicit ConsistencyError(const std::string& what) : Error(what) {}
};

// Malformed input file or JSON shape.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace smgkit
