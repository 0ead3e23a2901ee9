#pragma once

#include <stdexcept>
#include <string>

namespace hldecomp {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight that must be dominant has a negative coordinate.
class NonDominantError : public Error {
 public:
  using Error::Error;
};

/// A word of fundamental l-weights lies outside the prime family.
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

/// A height function has a flat edge inside the chosen interval.
class FlatEdgeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (sizes, ranges).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hldecomp
