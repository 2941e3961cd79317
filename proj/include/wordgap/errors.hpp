#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wordgap {

// Caller violated a documented precondition.
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed; position is a 0-based offset where known.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// An exact computation would exceed the configured budget. The engine refuses
// instead of silently degrading; `required` names the budget that would do.
struct BudgetError : std::runtime_error {
    BudgetError(const std::string& what, const std::string& required_budget)
        : std::runtime_error(what + "; required budget: " + required_budget),
          required(required_budget) {}
    std::string required;
};

// A quantity the underlying theory guarantees failed to hold. Never expected
// to fire; if it does, the report it carries is the interesting artifact.
struct InternalCheckError : std::runtime_error {
    explicit InternalCheckError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wordgap
