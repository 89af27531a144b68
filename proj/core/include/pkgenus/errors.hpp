#pragma once

#include <stdexcept>
#include <string>

namespace pkgenus {

/// Malformed input structure: a non-bijective permutation, an arc endpoint
/// out of range, a vertex used twice.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested object class is empty (e.g. genus larger than floor(n/2)).
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace pkgenus
