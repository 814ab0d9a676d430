#pragma once

#include <stdexcept>
#include <string>

namespace sympow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A monomial or ideal does not live in the expected ring.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its domain (colon by the zero ideal, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// The observed window is too short to support a conclusion.
class InsufficientData : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug in the engine.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

} // namespace sympow
