#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Rejected input: malformed descriptor, structure mismatch, invalid axis.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word grammar error; `position` is the 0-based character offset of the
/// offending token.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A computation was refused because it would exceed a configured guard.
/// Guards are hard limits: nothing is ever silently truncated.
class GuardRefusal : public std::runtime_error {
 public:
  GuardRefusal(const std::string& what, long long bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
        bound_(bound) {}
  long long bound() const { return bound_; }

 private:
  long long bound_;
};

}  // namespace garside
