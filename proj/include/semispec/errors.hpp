#pragma once

#include <stdexcept>
#include <string>

namespace semispec {

/// Base of every error raised by the library. Subclasses map one-to-one to
/// the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input structure (table dimensions, out-of-range indices).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON that cannot be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested representation or shape is not supported.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure stopped at its bound without an answer.
class BoundedResultError : public Error {
 public:
  using Error::Error;
};

}  // namespace semispec
