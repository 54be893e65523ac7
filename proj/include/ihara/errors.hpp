#pragma once

#include <stdexcept>
#include <string>

namespace ihara {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A graph or voltage assignment violates a standing assumption
// (connectivity, minimum valency, voltage count).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A derived cover (or an intermediate cover) is disconnected where a
// theorem-facing operation needs it connected.
class DisconnectedCoverError : public Error {
 public:
  using Error::Error;
};

// Shape mismatch: non-square input, vector length mismatch, operands over
// different groups or conductors.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// The operation does not apply to this input (e.g. the Kuroda relation on
// a group that is not elementary abelian of exponent 2).
class MisuseError : public Error {
 public:
  using Error::Error;
};

// Two independent computations that must agree did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ihara
