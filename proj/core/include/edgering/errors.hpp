#pragma once

#include <stdexcept>
#include <string>

namespace edgering {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, unsorted parts, wrong dimensions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A partition outside the family with class group Z^n (n <= 2, or n = 3 with
/// r1 = 1). These edge rings are Hibi rings; see poset.hpp.
class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was refused because the input exceeds its bound.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed. Indicates a bug, not bad input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A mathematical check came out false (e.g. two class-group routes disagree).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace edgering
