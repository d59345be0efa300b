#pragma once

#include <stdexcept>
#include <string>

namespace zykov {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad vertex, bad probability, zero graph where one is not allowed).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Serialized data that does not follow the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded one of its configured budgets.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A quotient A/B was requested with c(B) = 0.
class DivisionByCliqueZero : public Error {
 public:
  using Error::Error;
};

}  // namespace zykov
