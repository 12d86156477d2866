#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhopf {

// Operands come from different presentations, or an operation was handed an
// element of the wrong algebra.
class PresentationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t column, const std::string& what)
      : std::invalid_argument("column " + std::to_string(column) + ": " + what),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// A graded component (t_N, alpha_N) whose symbol does not match alpha_N u^{-N}.
class IncompatiblePair : public std::domain_error {
 public:
  IncompatiblePair(int weight, const std::string& symbol, const std::string& alpha)
      : std::domain_error("incompatible pair at N=" + std::to_string(weight) +
                          ": symbol(t)=" + symbol + ", alpha=" + alpha),
        weight_(weight) {}
  int weight() const noexcept { return weight_; }

 private:
  int weight_;
};

class DimensionTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bass construction: the symbols of the lifts c, d are not mutually inverse.
class LiftInversionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Lifts or splittings handed to the connection combiner are not graded maps
// onto the right components.
class NonGradedSplitting : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularSystem : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qhopf
