#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taumap {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed surface syntax. `pos` is a 0-based byte offset into the input.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t at)
      : Error(what + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

// Syntactically valid label that names no object of the requested group.
struct UnknownLabel : Error {
  using Error::Error;
};

// Operation not defined for the requested type.
struct UnsupportedType : Error {
  using Error::Error;
};

struct UnknownLevi : Error {
  using Error::Error;
};

struct UnknownD : Error {
  using Error::Error;
};

struct UnknownStratum : Error {
  using Error::Error;
};

struct MissingPlugin : Error {
  using Error::Error;
};

struct InvalidParam : Error {
  using Error::Error;
};

}  // namespace taumap
