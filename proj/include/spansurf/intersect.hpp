#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace spansurf {

// Result of the best-r-wise-intersection selection over a set system.
// `exhaustive` tells which mode ran: all C(m,r) index sets when that count
// is at most 1e6, otherwise seeded random sampling (the seed is recorded).
// `gamma` is the measured density sum|X_i| / (m * |universe|) and
// `lemma_bound_met` reports whether |intersection| >= gamma^r * |universe| / 2.
struct IntersectionResult {
    std::vector<int> chosen;        // K, ascending indices into the set list
    std::vector<int> intersection;  // ascending elements of the universe
    bool exhaustive = true;
    uint64_t seed = 0;
    uint64_t samples = 0;
    double gamma = 0.0;
    bool lemma_bound_met = false;
};

IntersectionResult best_intersection(const std::vector<std::vector<int>>& sets,
                                     int universe_size, int r,
                                     std::optional<uint64_t> seed = std::nullopt);

}  // namespace spansurf
