#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace phoenix {

// Seeded generator with hand-rolled distributions so that results are
// reproducible across standard libraries (std::*_distribution output is
// implementation defined) and so that gaussian() carries no hidden state
// between calls.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform index in [0, n).
    size_t index(size_t n) {
        return static_cast<size_t>(static_cast<double>(n) * uniform01());
    }

    bool chance(double p) { return uniform01() < p; }

    // Box-Muller, one value per call (no cached second sample).
    double gaussian(double mean = 0.0, double sigma = 1.0) {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace phoenix
