// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "mrf/errors.hpp"

namespace mrf {

/// One gamma summand Ga(shape, rate), density kernel
/// rate^shape λ^{shape-1} e^{-rate·λ} / Γ(shape).
struct GammaComponent {
    double shape = 0.0;  ///< > 0
    double rate = 0.0;   ///< > 0 (inverse scale)
};

/// Mixing law of a sum of independent gamma variables with possibly unequal
/// rates: the sum is distributed as Ga(totalShape + K, sigmaMax) where K is
/// an integer random index with P(K = k) = probs[k] = cPlus * deltas[k].
/// The list is truncated once the represented mass reaches the requested
/// tolerance; massDeficit is the truncated remainder 1 - sum(probs).
struct ConvolutionPMF {
    double cPlus = 1.0;        ///< normalizer, in (0, 1]
    double sigmaMax = 0.0;     ///< largest component rate
    double totalShape = 0.0;   ///< sum of component shapes
    std::size_t truncationK = 0;
    double massDeficit = 0.0;
    std::vector<double> deltas;
    std::vector<double> probs;
};

/// Build the mixing pmf for the given components via the delta recursion
///   delta_0 = 1,  delta_k = k^{-1} sum_{l=1..k} g_l delta_{k-l},
///   g_l = sum_i shape_i (1 - rate_i/sigmaMax)^l,
/// truncating once cumulative mass >= 1 - massTolerance. When all rates are
/// equal the pmf is exactly [1] (the sum is plain gamma). Fails with
/// NoConvergence if 100000 terms do not reach the tolerance (extreme rate
/// ratios only).
ConvolutionPMF convolution_pmf(const std::vector<GammaComponent>& components,
                               double massTolerance = 1e-12);

/// Value of numeratorShape * E[1/(totalShape + K)] under the truncated pmf,
/// with an upper bound on the truncated-tail contribution.
struct ExpectedRatio {
    double value = 0.0;
    double errorBound = 0.0;  ///< numeratorShape * massDeficit / totalShape
};

/// numeratorShape * sum_k probs[k]/(totalShape + k); the tail the truncation
/// dropped is bounded by numeratorShape * massDeficit / totalShape and is
/// reported, not added to the value.
ExpectedRatio expected_ratio(const ConvolutionPMF& pmf, double numeratorShape);

}  // namespace mrf
