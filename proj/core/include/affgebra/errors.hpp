#pragma once

#include <stdexcept>
#include <string>

namespace affgebra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalar literals, matrix grammars, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Violated mathematical precondition: field or dimension mismatch, division
/// by zero, membership violation, failed idempotency, and the like.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace affgebra
