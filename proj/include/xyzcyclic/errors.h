#pragma once

#include <stdexcept>
#include <string>

namespace xyz {

/// An operation was called outside its documented domain (e.g. a
/// repetition-structure query on a code encoding three qubits).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested syndrome is not in the column space of the check matrix.
class InfeasibleSyndrome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimated_cost)
      : std::runtime_error(what), estimated_cost_(estimated_cost) {}
  double estimated_cost() const { return estimated_cost_; }

 private:
  double estimated_cost_;
};

/// A closed-form witness construction produced no valid operator.
class WitnessNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xyz
