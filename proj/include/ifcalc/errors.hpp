#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ifcalc {

/// Input lies outside the admissible domain by more than the validation slack.
class DomainViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A derivative was requested at a point where the function is not smooth.
class NonDifferentiable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input data; carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ifcalc
