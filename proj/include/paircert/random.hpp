#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace paircert {

// SplitMix64 finalizer; used both as a bit mixer and for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed-splitting rule used across the project: a command-level seed is
// combined with a component name (FNV-1a hashed) and an optional stream
// index. Derived streams are independent for distinct names/indices and
// reproducible across runs.
std::uint64_t derive_seed(std::uint64_t base, std::string_view component, std::uint64_t index = 0);

// Thin RNG wrapper. All distributions are implemented here rather than via
// std::*_distribution so that sampled values do not depend on the standard
// library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); never returns 0 (safe for logs).
    double uniform_pos() {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return u;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double gaussian();

    // Poisson draw; exact multiplication method for small means, Hormann's
    // PTRS transformed rejection for large ones.
    long long poisson(double mean);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace paircert
