#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "runlat/measures.hpp"

namespace runlat {

struct SelftestConfig {
    unsigned long long seed = 42;
    std::size_t budget = kDefaultBudget;
    int workers = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool budget_exceeded = false;
    std::string summary;
    std::vector<std::string> failures;
};

// Runs the acceptance criteria (all of them, or the ids in `only`), printing
// one PASS/FAIL line per criterion plus itemized failure lines.
std::vector<CriterionResult> run_acceptance(const SelftestConfig& config, std::ostream& out,
                                            const std::vector<int>& only = {});

// 0 when everything passed, 3 when a budget error blocked a criterion,
// 4 otherwise.
int acceptance_exit_code(const std::vector<CriterionResult>& results);

}  // namespace runlat
