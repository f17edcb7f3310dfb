#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spansurf {

// One acceptance check. Informational items report a measurement and never
// fail the suite.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool informational = false;
    std::string detail;
    double secs = 0.0;
};

// Runs the full paper-verification suite, streaming one line per criterion
// to `log`. Deterministic: every randomized sweep uses seeds fixed here.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace spansurf
