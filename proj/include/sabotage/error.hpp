#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sabotage {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pure operation was called outside its domain (deleting an absent edge,
// emptying a model, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// One invariant violation of a serialized model.
struct Violation {
  std::string field;   // "worlds", "edges", "propositions", "valuation", "point"
  std::string code;    // e.g. "undeclared-world", "duplicate-edge"
  std::string item;    // offending item, rendered as text

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& v);

class ModelError : public Error {
 public:
  explicit ModelError(std::vector<Violation> violations);
  explicit ModelError(const std::string& message) : Error(message) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured enumeration bound (oracle, characteristic
// formulas).
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sabotage
