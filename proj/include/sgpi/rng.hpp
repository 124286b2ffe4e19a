#pragma once

#include <cmath>
#include <cstdint>

namespace sgpi {

// SplitMix64 finalizer (Steele et al.). Bijective, full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based key derivation: a pure function of (seed, a, b). Edge draws
// are keyed by (seed, i, j) and trial seeds by (base_seed, grid, trial), so
// results never depend on evaluation or scheduling order.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b) noexcept {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (a + 0xd1b54a32d192ed03ULL));
    h = mix64(h ^ (b + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

// Top 53 bits mapped to [0, 1).
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double pair_uniform(std::uint64_t seed, std::uint64_t i,
                              std::uint64_t j) noexcept {
    return to_unit_interval(derive_key(seed, i, j));
}

// Sequential SplitMix64 stream, used where a plain stream is enough
// (e.g. the solver's random start vector).
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    constexpr double next_unit() noexcept { return to_unit_interval(next()); }

    // Standard normal via Box-Muller.
    double next_gaussian() noexcept {
        double u1 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::uint64_t state_;
};

}  // namespace sgpi
