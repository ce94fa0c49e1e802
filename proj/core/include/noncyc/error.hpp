#pragma once

#include <stdexcept>
#include <string>

namespace noncyc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group recipe with parameters outside its domain.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// An imported or assembled multiplication table that is not a group.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured size or search cap was exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation that needs a non-cyclic group is handed a cyclic one.
class CyclicGroupError : public Error {
 public:
  CyclicGroupError() : Error("group is cyclic") {}
  explicit CyclicGroupError(const std::string& what) : Error(what) {}
};

/// Malformed input file or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace noncyc
