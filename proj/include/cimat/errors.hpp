#pragma once

#include <stdexcept>
#include <string>

namespace cimat {

/// Malformed textual input (scalar, polynomial or document).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Arithmetic that has no value in the scalar's domain: division by zero,
/// non-finite floating point results.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Operands of incompatible shape: arity mismatch, non-square matrix,
/// index out of range, size above a cost cap.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cimat
