#pragma once

#include <cstdint>

namespace vsch {

// Deterministic 64-bit generator (splitmix64).  Every randomized routine in
// the library takes an explicit seed or an Rng&, so identical inputs always
// reproduce identical outputs across platforms and thread counts.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n) by rejection; n > 0.
    uint64_t below(uint64_t n) {
        const uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    // Derive an independent sub-stream seed (used for per-curve workers).
    static uint64_t derive(uint64_t seed, uint64_t index) {
        Rng r(seed ^ (0x5851f42d4c957f2dull * (index + 1)));
        r.next();
        return r.next();
    }

private:
    uint64_t state_;
};

} // namespace vsch
