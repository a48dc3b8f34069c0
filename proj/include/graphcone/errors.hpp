#pragma once

#include <stdexcept>
#include <string>

namespace graphcone {

// Violated model invariant (bad cone element, forbidden surgery, ...).
// The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (graph files, element strings, flag values).
// The CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration work exceeded the configured budget.
struct BudgetError : DomainError {
    explicit BudgetError(const std::string& what) : DomainError(what) {}
};

} // namespace graphcone
