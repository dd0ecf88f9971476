#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction (loop, endpoint out of range, too many vertices).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 text. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A graph that cannot be written in the requested format.
class SerializationError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to an otherwise well-defined operation.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input outside the documented exactness or search bounds.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Unknown catalog name.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcg
