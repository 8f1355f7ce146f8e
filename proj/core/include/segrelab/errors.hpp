#pragma once

#include <stdexcept>
#include <string>

namespace segrelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A coefficient list does not fit the requested truncation order.
class LengthError : public Error {
  public:
    using Error::Error;
};

/// Two series with different truncation orders were combined.
class OrderError : public Error {
  public:
    using Error::Error;
};

/// A coefficient beyond the truncation order was requested.
class TruncationError : public Error {
  public:
    using Error::Error;
};

/// Input outside an operation's domain (wrong constant term, k < 0, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Compositional inverse does not exist.
class ReversionError : public Error {
  public:
    using Error::Error;
};

/// Numerical data that cannot come from an actual bundle or surface.
class InconsistentDataError : public Error {
  public:
    using Error::Error;
};

/// An operation was asked about a surface family it does not cover.
class UnsupportedGeometryError : public Error {
  public:
    using Error::Error;
};

}  // namespace segrelab
