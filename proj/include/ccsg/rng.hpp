#pragma once

#include <cstdint>
#include <random>

namespace ccsg {

/// Seeded uniform draws on top of std::mt19937_64. The standard library's
/// distributions are not bit-stable across implementations, so generated
/// fixtures use these helpers instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53 bits of entropy.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (static_cast<double>(hi) - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ccsg
