#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arthur {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DSL text; pos is a byte offset into the input.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : Error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Well-formed input that violates a structural invariant.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace arthur
