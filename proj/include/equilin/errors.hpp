#pragma once

#include <stdexcept>
#include <string>

namespace equilin {

// Base class for all library errors so the CLI can map them to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Size or shape of an argument does not match the action / operand.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Coefficient key or coefficient layout references a nonexistent slot.
struct LayoutError : Error {
    explicit LayoutError(const std::string& what) : Error(what) {}
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

struct UnsupportedSpecError : Error {
    explicit UnsupportedSpecError(const std::string& what) : Error(what) {}
};

// Outer subgroup generators do not act transitively on the tuple slots.
struct TransitivityError : Error {
    explicit TransitivityError(const std::string& what) : Error(what) {}
};

// Problem size exceeds the configured solver budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace equilin
