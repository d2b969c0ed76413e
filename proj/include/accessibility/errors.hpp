#ifndef ACCESSIBILITY_ERRORS_HPP
#define ACCESSIBILITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acc {

// Malformed input: instance files, tables, paths handed in by callers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed. Signals an engine bug, never bad input.
class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a report-style check: first violated condition plus a witness.
struct ValidationReport {
  bool        ok = true;
  std::string condition;
  std::string detail;
  long        witness = -1;

  static ValidationReport success() { return {}; }
  static ValidationReport failure(std::string condition, std::string detail,
                                  long witness = -1) {
    return {false, std::move(condition), std::move(detail), witness};
  }
  explicit operator bool() const { return ok; }
};

}  // namespace acc

#endif  // ACCESSIBILITY_ERRORS_HPP
