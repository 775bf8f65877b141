#pragma once

#include <cstdint>

#include "pcoh/rational.hpp"

namespace pcoh {

// Deterministic PRNG with the algorithm fixed here, so seeded runs produce
// identical streams on every platform (std::mt19937 would pin the engine but
// not the distributions). splitmix64 core.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection; n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~0ull - ~0ull % n;
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % n;
        }
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next_u64() & 1) != 0; }

    // Rational k/den with k uniform in [0, num_max].
    Rat rational(int num_max, int den) {
        return rat(range(0, num_max), den);
    }

private:
    std::uint64_t state_;
};

}  // namespace pcoh
