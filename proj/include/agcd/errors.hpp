#pragma once

#include <stdexcept>
#include <string>

namespace agcd {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// InfeasibleError -> 2, BudgetError -> 3, anything else -> 1.

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotInvertibleError : DomainError {
    using DomainError::DomainError;
};

struct DegenerateBasisError : DomainError {
    using DomainError::DomainError;
};

// Thrown when an exhaustive computation would exceed its operation budget.
// `trace` records how far the strategy got before giving up.
struct BudgetError : std::runtime_error {
    std::string trace;
    explicit BudgetError(const std::string& what, std::string trace_ = {})
        : std::runtime_error(what), trace(std::move(trace_)) {}
};

// Thrown when no lattice parameters satisfy the feasibility inequality.
// `best_margin` describes the closest miss found during the grid search.
struct InfeasibleError : std::runtime_error {
    std::string best_margin;
    explicit InfeasibleError(const std::string& what, std::string margin = {})
        : std::runtime_error(what), best_margin(std::move(margin)) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace agcd
