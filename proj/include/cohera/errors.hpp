#pragma once

#include <stdexcept>
#include <string>

namespace cohera {

/// Exponent or coefficient arithmetic left its representable range.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (e.g. normal form against a non-Gröbner basis).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unsupported option combination (term order, field, ...).
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A homological computation needed more of a resolution than its cap allows.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No supported strategy could decide the question; never a wrong answer.
class StrategyExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hard correctness tripwire fired (normal-form or fit validation).
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cohera
