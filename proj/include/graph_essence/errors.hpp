#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace essence {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size or kind mismatch between operands, malformed value types.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's mathematical domain (repeated vertex,
// non-cyclic input to an expansion, non-Hamiltonian circuit, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A path traverses a pair forbidden by an AdmissibilityMask.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// A search has no admissible answer.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the instance exceeds the guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(what, 0) {}

  // 1-based line in the source document, 0 when not known.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace essence
