#pragma once

#include <stdexcept>
#include <string>

namespace qcp {

// Bad input: zero columns, out-of-range parameters, malformed files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed result failed one of its self-checks (holdout mismatch,
// non-integral interpolant, non-monic constituent, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Fixed-width integer arithmetic would have wrapped around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Brute-force work would exceed the configured point-test budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcp
