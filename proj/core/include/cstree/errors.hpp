#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cstree {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed balanced-parentheses text; `offset()` is the index of the
/// offending character (or the text length when input ended early).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was applied outside of its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Step sequence violating the Dyck path invariants.
class MalformedPathError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampler ran out of attempts.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured capacity (series order, digit count).
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cstree
