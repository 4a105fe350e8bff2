#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steinerlab {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

struct AcceptOptions {
    std::string filter;  // substring match on criterion names; empty = all
    std::uint64_t seed = 0;
};

/// Runs the acceptance suite (desk-scale certification of the constructions,
/// cost formulas, gap constants, solver oracles and embeddings).
std::vector<CriterionResult> run_acceptance(const AcceptOptions& opt);

/// Prints one pass/fail line per criterion; returns the number of failures.
int report_acceptance(const std::vector<CriterionResult>& results);

}  // namespace steinerlab
