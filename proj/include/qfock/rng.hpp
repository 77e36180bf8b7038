#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace qfock {

// Seeded random source for the verification suites. The stream is pinned by
// the standard: mt19937_64 output plus explicit modular reduction, so a seed
// reproduces the same samples on every platform. No std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    // Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool flip() { return (next() & 1) != 0; }

private:
    std::mt19937_64 g_;
};

}  // namespace qfock
