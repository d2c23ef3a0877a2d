// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/rng.hpp"

#include <cmath>

namespace mrf {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

SubstreamRng::SubstreamRng(std::uint64_t rootSeed, std::uint64_t drawIndex,
                           std::uint64_t streamId) {
    // Chain the three keys through full avalanche rounds so that nearby
    // (draw, stream) pairs land on unrelated states.
    std::uint64_t s = avalanche(rootSeed + kGolden);
    s = avalanche(s ^ (drawIndex + 1) * kGolden);
    s = avalanche(s ^ (streamId + 1) * kGolden);
    state_ = s;
}

std::uint64_t SubstreamRng::next_u64() {
    state_ += kGolden;
    return avalanche(state_);
}

double SubstreamRng::uniform() {
    // 53 random bits, centered in the bin: lands strictly inside (0, 1).
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SubstreamRng::normal() {
    if (hasCachedNormal_) {
        hasCachedNormal_ = false;
        return cachedNormal_;
    }
    for (;;) {
        const double x = 2.0 * uniform() - 1.0;
        const double y = 2.0 * uniform() - 1.0;
        const double s = x * x + y * y;
        if (s >= 1.0 || s == 0.0) continue;
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        cachedNormal_ = y * scale;
        hasCachedNormal_ = true;
        return x * scale;
    }
}

double SubstreamRng::exponential() { return -std::log(uniform()); }

double SubstreamRng::gamma(double shape) {
    if (shape < 1.0) {
        // Boost trick: Ga(a) = Ga(a + 1) * U^{1/a}.
        const double boosted = gamma(shape + 1.0);
        return boosted * std::exp(std::log(uniform()) / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = normal();
        const double t = 1.0 + c * x;
        if (t <= 0.0) continue;
        const double v = t * t * t;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace mrf
