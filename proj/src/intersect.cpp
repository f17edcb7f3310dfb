#include "spansurf/intersect.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "spansurf/bits.hpp"

namespace spansurf {

namespace {

constexpr uint64_t kExhaustiveCap = 1'000'000;
constexpr uint64_t kSampleCount = 200'000;

uint64_t choose_capped(int m, int r, uint64_t cap) {
    uint64_t c = 1;
    for (int i = 1; i <= r; ++i) {
        c = c * static_cast<uint64_t>(m - r + i) / static_cast<uint64_t>(i);
        if (c > cap) return cap + 1;
    }
    return c;
}

}  // namespace

IntersectionResult best_intersection(const std::vector<std::vector<int>>& sets,
                                     int universe_size, int r,
                                     std::optional<uint64_t> seed) {
    const int m = static_cast<int>(sets.size());
    if (r < 1 || r > m) throw std::invalid_argument("best_intersection: r out of range");

    std::vector<Bits> rows(m, Bits(universe_size));
    uint64_t total = 0;
    for (int i = 0; i < m; ++i) {
        for (int x : sets[i]) rows[i].set(x);
        total += rows[i].count();
    }

    IntersectionResult res;
    res.gamma = universe_size == 0 || m == 0
                    ? 0.0
                    : static_cast<double>(total) / (static_cast<double>(m) * universe_size);

    auto words = [&](const Bits& b) { return b.words(); };
    const size_t nw = rows.empty() ? 0 : rows[0].words().size();
    std::vector<uint64_t> acc(nw), best_words(nw, 0);
    int best_count = -1;
    std::vector<int> best_k;

    auto eval = [&](const std::vector<int>& k) {
        acc.assign(nw, ~uint64_t{0});
        for (int i : k)
            for (size_t w = 0; w < nw; ++w) acc[w] &= words(rows[i])[w];
        int cnt = 0;
        for (uint64_t w : acc) cnt += std::popcount(w);
        if (cnt > best_count) {
            best_count = cnt;
            best_k = k;
            best_words = acc;
        }
    };

    if (choose_capped(m, r, kExhaustiveCap) <= kExhaustiveCap) {
        res.exhaustive = true;
        std::vector<int> k(r);
        for (int i = 0; i < r; ++i) k[i] = i;
        for (;;) {
            eval(k);
            int i = r - 1;
            while (i >= 0 && k[i] == m - r + i) --i;
            if (i < 0) break;
            ++k[i];
            for (int j = i + 1; j < r; ++j) k[j] = k[j - 1] + 1;
        }
    } else {
        if (!seed)
            throw std::invalid_argument(
                "best_intersection: sampling mode requires an explicit seed");
        res.exhaustive = false;
        res.seed = *seed;
        res.samples = kSampleCount;
        Rng rng(*seed);
        std::vector<int> k(r);
        std::vector<char> taken(m);
        for (uint64_t s = 0; s < kSampleCount; ++s) {
            std::fill(taken.begin(), taken.end(), 0);
            for (int i = 0; i < r; ++i) {
                int x;
                do {
                    x = rng.below(m);
                } while (taken[x]);
                taken[x] = 1;
                k[i] = x;
            }
            std::sort(k.begin(), k.end());
            eval(k);
        }
    }

    res.chosen = best_k;
    for (size_t w = 0; w < nw; ++w)
        for (int b = 0; b < 64; ++b) {
            int idx = static_cast<int>(w * 64 + b);
            if (idx < universe_size && ((best_words[w] >> b) & 1)) res.intersection.push_back(idx);
        }
    double bound = std::pow(res.gamma, r) * universe_size / 2.0;
    res.lemma_bound_met = static_cast<double>(res.intersection.size()) >= bound;
    return res;
}

}  // namespace spansurf
