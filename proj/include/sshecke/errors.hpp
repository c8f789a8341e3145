#pragma once

#include <stdexcept>
#include <string>

namespace sshecke {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller passed an argument outside a function's documented domain
// (composite p, unsupported ell, index out of range, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// Required input data is absent, e.g. no modular polynomial is available
// for a prime that a computation needs.
struct DataError : Error {
  using Error::Error;
};

// A data file does not conform to the expected grammar. Messages carry the
// line number of the offending entry.
struct ParseError : Error {
  using Error::Error;
};

// A mathematical precondition failed at runtime: division by zero, elements
// from mismatched fields, a divisor with nonpositive degree, ...
struct MathError : Error {
  using Error::Error;
};

// An internal invariant that should hold by theory was violated. Indicates
// a bug or corrupted input, never a user mistake.
struct ConsistencyError : Error {
  using Error::Error;
};

// Exact integer arithmetic would have left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace sshecke
