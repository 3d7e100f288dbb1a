#pragma once

#include <stdexcept>
#include <string>

namespace warpcurv {

// Elementary function evaluated outside its domain (sqrt of a negative, etc.).
class DomainError : public std::domain_error {
 public:
  DomainError(std::string function, double value)
      : std::domain_error(function + ": argument " + std::to_string(value) + " outside domain"),
        function_(std::move(function)),
        value_(value) {}
  DomainError(const std::string& what, std::string function, double value)
      : std::domain_error(what), function_(std::move(function)), value_(value) {}

  const std::string& function() const noexcept { return function_; }
  double value() const noexcept { return value_; }

 private:
  std::string function_;
  double value_;
};

// Model parameter outside the admissible range (alpha > alpha_max, n < 2, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The parameter is admissible but sits on a degenerate boundary case.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller input (e.g. a non-orthonormal 2-plane).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace warpcurv
