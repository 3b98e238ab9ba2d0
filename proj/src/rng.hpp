#pragma once

// Deterministic random utilities. std::mt19937 is bit-exact on every
// platform, but the standard distributions and std::shuffle are not, so
// the few draws we need are spelled out here.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace genie {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(static_cast<std::uint32_t>(seed)) {}

    // Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps
    // the distribution exact.
    std::uint32_t next_below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
        std::uint32_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        const std::uint64_t hi = gen_() >> 5; // 27 bits
        const std::uint64_t lo = gen_() >> 6; // 26 bits
        return static_cast<double>((hi << 26) | lo) / 9007199254740992.0; // 2^53
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Standard normal via Box-Muller; second value of each pair is cached.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = next_double();
        } while (u1 <= 0.0);
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    // Fisher-Yates permutation of 0..n-1.
    std::vector<std::int64_t> permutation(std::int64_t n) {
        std::vector<std::int64_t> p(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        for (std::int64_t i = n - 1; i > 0; --i) {
            const auto j = next_below(static_cast<std::uint32_t>(i + 1));
            std::swap(p[static_cast<std::size_t>(i)], p[j]);
        }
        return p;
    }

private:
    std::mt19937 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace genie
