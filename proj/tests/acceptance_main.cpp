#include <iostream>

#include "wlm/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> groups(argv + 1, argv + argc);
    wlm::RunConfig cfg;
    auto results = wlm::run_acceptance(cfg, groups, std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    std::cout << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << results.size()
              << " run)\n";
    return all ? 0 : 1;
}
