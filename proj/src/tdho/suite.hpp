#pragma once

#include <string>
#include <vector>

namespace tdho {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool upper = true;   // measured <= bound when true, >= otherwise
    bool passed = false;
    bool gating = true;  // informational checks do not affect the verdict
};

struct SuiteOptions {
    double tol = 1e-12;
    unsigned long long seed = 20240611ULL;
    int random_params = 200;
};

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& options = {});

bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace tdho
