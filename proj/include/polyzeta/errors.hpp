#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but not implemented (depth, weight, continuation).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, words, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not reach its target accuracy.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyzeta
