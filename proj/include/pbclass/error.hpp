#pragma once

#include <stdexcept>
#include <string>

namespace pbclass {

/// Base for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inputs of incompatible shape (dimension, group or index mismatch).
class MismatchError : public Error {
public:
  using Error::Error;
};

/// Input that is well-formed but mathematically invalid.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// Request outside the supported computational range.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

} // namespace pbclass
