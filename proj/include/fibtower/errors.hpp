#pragma once

#include <stdexcept>
#include <string>

namespace fibtower {

/// Exact computation refused because an index exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A composite cofactor resisted the budgeted rho effort.
class FactorBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Brute-force period search ran past its step cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No exponent c <= bound satisfies j | a*s^c.
class NoC : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checker found a counterexample to a proved statement.
class NoWitness : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace fibtower
