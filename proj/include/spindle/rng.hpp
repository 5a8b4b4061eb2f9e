#pragma once

// Seeded 64-bit PRNG (splitmix64) so every randomized check is reproducible
// from the seed recorded in its report.

#include <cstdint>

namespace spindle {

class Rng {
    std::uint64_t s_;

  public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

}  // namespace spindle
