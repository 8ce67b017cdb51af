#pragma once

#include <stdexcept>
#include <string>

namespace csec {

// Base for every error raised by the toolkit. Callers that only care about
// "the input was rejected" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// A subgroup argument is not contained in the group it is paired with.
class NotContained : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotMaximal : public Error {
 public:
  using Error::Error;
};

// An operation would exceed one of the configured size caps (order cap,
// coset-action degree cap, field size cap).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised when a maximal subgroup has no chief factor K/L with L <= M and
// K not contained in M. Never expected for finite groups; kept distinct so
// it cannot be confused with bad input.
class MissingChiefPair : public Error {
 public:
  using Error::Error;
};

}  // namespace csec
