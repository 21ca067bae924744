#pragma once

#include <cmath>
#include <cstdint>

namespace symdisc {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over <random> engines plus
/// distributions because the distributions are not specified bit-for-bit
/// across standard libraries, and audits must replay identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // 53 random bits mapped to [0,1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int sign() { return (next() >> 63) ? 1 : -1; }

private:
    std::uint64_t state_;
};

}  // namespace symdisc
