#pragma once

#include <string>
#include <vector>

namespace equilin {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string details;
};

// The repository's verification gates: commutant dimensions against closed
// forms, wreath totals, subgroup counts, decomposition round trips,
// randomized equivariance, span completeness of the tuple layers, and
// dimension audits. Deterministic given the built-in seed.
std::vector<CriterionResult> run_acceptance();

inline constexpr uint64_t kDefaultSeed = 1729;

}  // namespace equilin
