// Acceptance suite runner: one pass/fail line per criterion, nonzero exit
// when any non-informational criterion fails.

#include <iostream>

#include "spansurf/verify.hpp"

int main() {
    auto results = spansurf::run_acceptance(std::cout);
    if (spansurf::all_passed(results)) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << "FAILED criteria:";
    for (const auto& r : results)
        if (!r.pass) std::cout << " " << r.id;
    std::cout << "\n";
    return 1;
}
