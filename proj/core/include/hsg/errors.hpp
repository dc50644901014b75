#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsg {

// Malformed input: out-of-range elements, carrier mismatches, bad documents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A document could not be parsed. Carries the 1-based line of the problem
// (0 when the problem is not tied to a single line).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError(line == 0 ? what
                             : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was called outside its domain, e.g. a classifier on a
// hypergroupoid that is not associative.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotHypersemigroupError : public PreconditionError {
 public:
  NotHypersemigroupError()
      : PreconditionError("hyperoperation is not associative") {}
};

class NotRegularError : public PreconditionError {
 public:
  NotRegularError() : PreconditionError("hypersemigroup is not regular") {}
};

class NotIdealError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An exhaustive run was requested over a population larger than allowed.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsg
