#ifndef TWOSIG_ERRORS_HPP
#define TWOSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twosig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text, JSON, CSV or PGM input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A brute-force evaluation or enumeration would exceed its configured budget.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural invariant (epsilon line, non-constant border, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Operands disagree on the number of letters/channels or on a required shape.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace twosig

#endif  // TWOSIG_ERRORS_HPP
