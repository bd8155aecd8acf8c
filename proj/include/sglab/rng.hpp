#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace sglab::rng {

// Counter-based generator: every variate is a pure function of
// (key, counter), so replicas and parallel workers never share state.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// (master seed, replica, stream) -> independent key, by iterated mixing.
struct SeedLineage {
    std::uint64_t master = 0;
    std::uint64_t replica = 0;
    std::uint64_t stream = 0;

    std::uint64_t key() const {
        std::uint64_t k = splitmix64(master ^ 0xD1B54A32D192ED03ull);
        k = splitmix64(k ^ (replica * 0xA24BAED4963EE407ull + 1));
        k = splitmix64(k ^ (stream * 0x9FB21C651E98DF25ull + 1));
        return k;
    }
};

inline double uniform01(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t bits = splitmix64(key + counter * 0x9E3779B97F4A7C15ull);
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Box-Muller pair from counters (2c, 2c+1).
inline std::pair<double, double> normal_pair(std::uint64_t key, std::uint64_t counter) {
    double u1 = uniform01(key, 2 * counter);
    double u2 = uniform01(key, 2 * counter + 1);
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
}

inline double normal(std::uint64_t key, std::uint64_t counter) {
    return normal_pair(key, counter).first;
}

}  // namespace sglab::rng
