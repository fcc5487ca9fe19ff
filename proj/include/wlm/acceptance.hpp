#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wlm/config.hpp"

namespace wlm {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::vector<std::string> notes; // failure details / key measured values
};

// Runs the acceptance criteria (all, or only the named groups), printing one
// pass/fail line per criterion. Each criterion carries its own wall-clock
// budget; exceeding it fails the criterion.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg,
                                            const std::vector<std::string>& groups,
                                            std::ostream& out);

std::vector<std::string> acceptance_group_names();

} // namespace wlm
