#pragma once

#include <stdexcept>
#include <string>

namespace revsyn {

class WidthMismatch : public std::invalid_argument {
 public:
  explicit WidthMismatch(const std::string& message)
      : std::invalid_argument(message) {}
};

class NotReducible : public std::invalid_argument {
 public:
  explicit NotReducible(const std::string& message)
      : std::invalid_argument(message) {}
};

// Raised when a pick routine finds no admissible pair. Reaching this from the
// synthesis pipeline means the input state violated a precondition.
class PairNotFound : public std::runtime_error {
 public:
  explicit PairNotFound(const std::string& message)
      : std::runtime_error(message) {}
};

class PreconditionViolated : public std::invalid_argument {
 public:
  explicit PreconditionViolated(const std::string& message)
      : std::invalid_argument(message) {}
};

class MissingCostEntry : public std::out_of_range {
 public:
  explicit MissingCostEntry(const std::string& message)
      : std::out_of_range(message) {}
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    not_a_bijection,
    wrong_count,
    malformed_integer,
    unbalanced,
    unknown_directive,
    unknown_line_name,
    arity_mismatch,
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace revsyn
