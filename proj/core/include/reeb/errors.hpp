#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reeb {

// Base for every caller-correctable failure (bad shapes, out-of-range
// degrees, malformed coefficients). The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generating manifold that is not a member of the catalog.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

// Generating manifold too large for the target: dim S must be < n.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

// A plan whose operation at `index()` cannot be applied.
class PlanError : public InputError {
 public:
  PlanError(std::size_t index, const std::string& what)
      : InputError("operation " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// The planners only realize free sequences.
class UnsupportedTorsion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A planning strategy whose precondition does not hold for the target.
class StrategyInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reeb
