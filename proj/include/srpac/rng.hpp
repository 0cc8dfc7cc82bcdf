// Counter-based deterministic RNG (splitmix64 core) with documented seed
// derivation, so independent streams per (trial, position, frame) are
// reproducible across platforms and thread counts.
//
// Stream derivation: seed(base, a, b, c) chains the splitmix64 finalizer:
//   h = mix(base); h = mix(h ^ mix(a)); h = mix(h ^ mix(b)); h = mix(h ^ mix(c))
// where mix(x) is the splitmix64 output function applied to x + 0x9E3779B97F4A7C15.
#ifndef SRPAC_RNG_HPP
#define SRPAC_RNG_HPP

#include <cstdint>

#include "srpac/common.hpp"

namespace srpac {

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline uint64_t mix64(uint64_t x) {
    uint64_t s = x;
    return splitmix64_next(s);
}

// Deterministic stream seed from a base seed and up to three indices.
inline uint64_t derive_seed(uint64_t base, uint64_t a = 0, uint64_t b = 0, uint64_t c = 0) {
    uint64_t h = mix64(base);
    h = mix64(h ^ mix64(a + 1));
    h = mix64(h ^ mix64(b + 1));
    h = mix64(h ^ mix64(c + 1));
    return h;
}

class Rng {
public:
    explicit Rng(uint64_t seed = 0) : state_(seed) {}

    uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in (a, b).
    double uniform(double a, double b) { return a + uniform01() * (b - a); }

    // Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    uint64_t state_;
};

}  // namespace srpac

#endif  // SRPAC_RNG_HPP
