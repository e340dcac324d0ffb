#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

/// Malformed textual input (cycle notation, group files, inventories).
/// `line` is 1-based when the input came from a file, 0 otherwise.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

/// A backtrack search ran past its node or wall-clock budget.
/// Searches abort rather than return a possibly wrong answer.
class BudgetExhausted : public std::runtime_error {
public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Oracle enumeration hit its element cap.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cgt
