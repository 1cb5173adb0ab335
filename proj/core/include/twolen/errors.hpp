#ifndef TWOLEN_ERRORS_HPP_
#define TWOLEN_ERRORS_HPP_

#include <stdexcept>
#include <string>

#include "twolen/schedule.hpp"

namespace twolen {

// Malformed text input (JSON or DIMACS). `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, std::string field = {})
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

// A well-formed value that breaks an invariant or an operation's
// precondition.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what, Violations violations = {})
      : std::runtime_error(what), violations_(std::move(violations)) {}

  const Violations& violations() const { return violations_; }

 private:
  Violations violations_;
};

// An oracle declined to run because its size guard was exceeded.
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced a value that fails its own postcondition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twolen

#endif  // TWOLEN_ERRORS_HPP_
