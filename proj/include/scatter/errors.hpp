#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

// Argument outside the mathematical domain of an operation (poles, r(n)=0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds the documented desk-scale budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root finding could not certify a root (no sign change, residual too large).
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unusable experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace scatter
