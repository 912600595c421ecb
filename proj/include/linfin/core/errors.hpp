#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linfin {

// Malformed input: bad field descriptors, reducible minimal polynomials,
// singular generators, dimension or descriptor mismatches.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematical impossibility during an operation (division by zero,
// inverting a singular matrix, a zero divisor in a non-field quotient).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured budget (entry size, enumeration, search) was exhausted.
// Never a mathematical verdict.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated internal invariant: a construction bug, not user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : DomainError("parse error at offset " + std::to_string(offset) + ": " +
                    what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace linfin
