#pragma once

#include <stdexcept>
#include <string>

namespace gk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two paths do not compose (target of the first differs from the source of the second).
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget before reaching a verdict.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// The query is outside what the context supports (e.g. non-Noetherian).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// No greatest family element divides the input: the family is not Garside here.
class HeadUndefined : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A breadth-first enumeration exceeded its node budget.
class ExplosionGuard : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line` is 1-based, 0 when not tied to a file line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gk
