#pragma once

#include <stdexcept>
#include <string>

namespace bcp {

/// A caller broke an operation's precondition (or an internal invariant failed).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed or unsupported input: bad graph data, bad file syntax, bad parameters.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive or exact search ran past its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& what) {
    if (!condition) throw ContractViolation(what);
}

}  // namespace bcp
