#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

// Mismatched shapes: variable counts, truncation bounds, dimensions, indices.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

// An input outside the mathematical domain of an operation
// (non-unit constant term, h'(0) != 0, non-triangular frame, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A query at a weight beyond what an element is known through.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text literal.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace brieskorn
