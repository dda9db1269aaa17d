#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fqa {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard; the standard *distributions* are not, so uniform/normal draws are
// mapped from raw bits here to keep results identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    // [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integers in [lo, hi], both inclusive. Rejection sampling, no modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(bounded(span));
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller. The sine half of the pair is discarded
    // so the draw count per call is fixed.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Per-item generator rule: one independent stream per (global seed, item).
    static std::uint64_t derive(std::uint64_t global_seed, std::uint64_t item_index) {
        return global_seed ^ item_index;
    }

private:
    std::uint64_t bounded(std::uint64_t span) {
        if (span == 0) return gen_();
        std::uint64_t x, r;
        do {
            x = gen_();
            r = x % span;
        } while (x - r > std::uint64_t{0} - span);
        return r;
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace fqa
