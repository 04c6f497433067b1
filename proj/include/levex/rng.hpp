#ifndef LEVEX_RNG_HPP
#define LEVEX_RNG_HPP

#include <cmath>
#include <cstdint>

#include "levex/common.hpp"

namespace levex {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic, platform-independent generator (xoshiro256++): results do
/// not depend on standard-library distribution internals, so identical seeds
/// give byte-identical outputs across runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Derived stream for a work chunk: results independent of threading.
    Rng fork(std::uint64_t chunk) const {
        std::uint64_t sm = s_[0] ^ (0x9e3779b97f4a7c15ULL * (chunk + 1));
        return Rng(splitmix64(sm));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in (0, 1).
    double uniform() {
        const std::uint64_t u = next() >> 11;  // 53 bits
        return (static_cast<double>(u) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double normal() {
        // Box-Muller; no state cached so draws map 1:1 to a fixed call count.
        const double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    double exponential() { return -std::log(uniform()); }

    long poisson(double mean) {
        long total = 0;
        // Chunk large means so the inversion product never underflows.
        while (mean > 32.0) {
            total += poisson_small(32.0);
            mean -= 32.0;
        }
        return total + poisson_small(mean);
    }

    /// Symmetric alpha-stable with characteristic function exp(-|u|^alpha)
    /// (Chambers-Mallows-Stuck construction).
    double stable_standard(double alpha) {
        const double v = kPi * (uniform() - 0.5);
        const double w = exponential();
        if (alpha == 1.0) return std::tan(v);
        const double t = std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha);
        const double s = std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
        return t * s;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    long poisson_small(double mean) {
        if (mean <= 0.0) return 0;
        const double limit = std::exp(-mean);
        double prod = 1.0;
        long n = -1;
        do {
            prod *= uniform();
            ++n;
        } while (prod > limit);
        return n;
    }

    std::uint64_t s_[4];
};

}  // namespace levex

#endif
