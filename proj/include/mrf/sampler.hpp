// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mrf/copula.hpp"
#include "mrf/model.hpp"

namespace mrf {

enum class BatchKind {
    Uniforms,      ///< copula pseudo-observations, entries in (0, 1)
    DefaultTimes,  ///< lifetimes, entries > 0
};

/// A matrix of draws (rows = draws, columns = components) together with the
/// provenance needed to reproduce it: the root seed and the model digest.
/// Identical (seed, model) reproduce identical batches bit for bit, for any
/// thread count.
struct SampleBatch {
    std::vector<double> values;  ///< row-major, count x components
    std::size_t count = 0;
    std::size_t components = 0;
    BatchKind kind = BatchKind::Uniforms;
    std::uint64_t seed = 0;
    std::string modelHash;

    double at(std::size_t row, std::size_t col) const {
        return values[row * components + col];
    }
};

/// Draw joint copula uniforms by the latent-intensity representation: per
/// draw, sample Lambda_j ~ Ga(xi_j, 1) for every factor, one shared Exp(1)
/// arrival clock per comonotone factor, one Exp(1) clock per (component,
/// independent factor) pair, and set
///   U_i = psi_i(min over i's factors of clock_j / Lambda_j),
/// psi_i(t) = (1 + t)^{-aggShape_i}. threads > 1 partitions draws into
/// disjoint row blocks; output is independent of the partitioning.
SampleBatch sample_copula(const MRFModel& model, std::size_t count,
                          std::uint64_t seed, unsigned threads = 1);

/// Draw default times by the barrier representation with linear integrated
/// intensities:
///   tau_i = min(min over comonotone j of T_j, E_i / sum over independent j
///   of Lambda_j),
/// where T_j = e_j / Lambda_j is the shared first arrival of comonotone
/// factor j and E_i ~ Exp(1) is component i's own barrier. Comonotone hits
/// make distinct components default at bitwise-equal times. Transforming a
/// batch through the marginal survival functions reproduces the copula of
/// sample_copula in distribution. (The uniform-barrier variant of the same
/// representation is not separately implemented: it is the monotone map
/// u = e^{-theta} away from this one.)
SampleBatch sample_default_times(const MRFModel& model, std::size_t count,
                                 std::uint64_t seed, unsigned threads = 1);

/// Fraction of batch rows lying componentwise at or below `point`.
double empirical_copula(const SampleBatch& batch, const CopulaPoint& point);

/// Write a batch as CSV: header "comp_1,...,comp_n", one row per draw, 17
/// significant digits.
void write_batch_csv(const SampleBatch& batch, std::ostream& out);

/// Metadata sidecar for a CSV export: seed, count, model hash, batch kind.
std::string batch_sidecar_json(const SampleBatch& batch);

}  // namespace mrf
