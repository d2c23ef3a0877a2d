// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace mrf {

/// Deterministic keyed substream generator.
///
/// Sampling must produce identical batches for identical (seed, model)
/// regardless of thread count, so every random quantity gets its own stream
/// keyed by (rootSeed, drawIndex, streamId): the three keys are pushed
/// through a SplitMix64 avalanche chain to seed a SplitMix64 state. Streams
/// never share state, which makes draw generation order-free and therefore
/// embarrassingly parallel.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t rootSeed, std::uint64_t drawIndex,
                 std::uint64_t streamId);

    /// Next raw 64-bit word.
    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1); never returns 0 or 1, so logs
    /// of uniforms are always finite.
    double uniform();

    /// Standard normal via the Marsaglia polar method (exact; pairs cached).
    double normal();

    /// Exp(1) variate, computed as -log(uniform()).
    double exponential();

    /// Gamma(shape, rate 1) via the Marsaglia-Tsang rejection method, exact
    /// for every shape > 0 (shapes below 1 use the Ga(shape+1) boost with a
    /// uniform power).
    double gamma(double shape);

private:
    std::uint64_t state_;
    double cachedNormal_ = 0.0;
    bool hasCachedNormal_ = false;
};

}  // namespace mrf
