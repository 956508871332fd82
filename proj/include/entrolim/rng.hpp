#pragma once

// SPDX-License-Identifier: Apache-2.0

// Counter-based random number generation. Every consumer owns its own
// stream, derived by splitting a root seed with a tag, so regenerating
// any piece of a run is independent of evaluation order. Output is
// identical across platforms: no std::<distribution> is used anywhere.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace entrolim::rng {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer; full-avalanche 64-bit mix.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace detail

// Stateless-core generator: the i-th output is mix64(key + i * golden),
// i.e. a pure function of (key, counter).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(detail::mix64(key + detail::kGolden)) {}

    // Derive an independent child stream; children with distinct tags
    // (or distinct parents) never collide in practice.
    [[nodiscard]] CounterRng split(std::uint64_t tag) const {
        return CounterRng(key_ ^ detail::mix64(tag + 0x632BE59BD9B4E019ull));
    }
    [[nodiscard]] CounterRng split(std::string_view tag) const {
        return split(detail::fnv1a(tag));
    }

    std::uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * detail::kGolden); }

    // Uniform on the open interval (0, 1); never returns an endpoint.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Gamma(shape, scale 1) by Marsaglia-Tsang squeeze; shapes below 1
    // are boosted through Gamma(shape + 1) and a uniform power.
    double gamma(double shape) {
        if (shape <= 0.0) throw std::invalid_argument("gamma: shape must be > 0");
        if (shape < 1.0) {
            const double boost = std::pow(uniform01(), 1.0 / shape);
            return gamma(shape + 1.0) * boost;
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace entrolim::rng
