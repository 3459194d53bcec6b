#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfq {

/// Argument sits on (or within tolerance of) a pole of the function or series.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside the domain in which the routine guarantees its accuracy.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Series cannot converge for the requested argument.
class DivergentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A summation theorem was applied outside its stated convergence condition.
class ConvergenceDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Real-valued operation outside its mathematical domain (e.g. sqrt of a negative).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivideByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InsufficientTerms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input; `position()` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pfq
