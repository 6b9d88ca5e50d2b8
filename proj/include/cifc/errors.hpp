#pragma once

#include <stdexcept>
#include <string>

namespace cifc {

/// Argument outside the mathematical domain of an operation (negative
/// exponent, wrong user count, violated precondition).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inconsistent shapes between a channel, a knowledge structure and a scheme.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive search refused because the instance exceeds its enumeration budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cifc
