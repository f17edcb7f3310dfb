#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace spansurf {

// Compact bit row used for adjacency rows and facet masks.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    static int and_count(const Bits& a, const Bits& b) {
        int c = 0;
        for (size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
        return c;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

// Deterministic RNG helpers. mt19937_64 output is fully specified by the
// standard, so seeded runs reproduce across platforms; the bounded draw
// below uses plain modulo (bias is irrelevant at our scales).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        // xorshift* keeps the dependency footprint at zero and is reproducible.
        uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    int below(int bound) { return static_cast<int>(next() % static_cast<uint64_t>(bound)); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

}  // namespace spansurf
