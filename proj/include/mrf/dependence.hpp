// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "mrf/model.hpp"

namespace mrf {

/// Spearman's rank correlation of a component pair, evaluated exactly:
///   rho_S = (6/b) (xiK h(xiI) + xiI h(xiK)) - 3,
///   b = 2 xiI + 2 xiK - xiCommon,
///   h(x) = 3F2(2x, 1, gammaCommon; 2x + 1, b + 1; -1).
/// Always in [0, 1]: the family covers exactly the non-negative dependence
/// range, from 0 (no shared factors) to 1 (Frechet upper bound).
double spearman_rho(const BivariateClaytonParams& params);

/// Independent oracle for spearman_rho: adaptive two-dimensional quadrature
/// of 12 * integral of C(u, v) - 3. The integration grid is split along the
/// singular curve u = v^{xiI/xiK} so the kink never sits inside a panel, and
/// the corner panels at 0 are handled with a logarithmic substitution.
/// tol is the absolute target for the double integral (>= 1e-10).
double spearman_rho_numeric(const BivariateClaytonParams& params,
                            double tol = 1e-9);

/// Closed corollary for the no-comonotone case (alphaCommon must be 0):
///   rho_S = 3 [3F2(1, 1, gammaCommon; 2 xiI + 1, 2 xiK + 1; 1) - 1].
/// Must agree with spearman_rho.
double spearman_archimedean(const BivariateClaytonParams& params);

/// Pairwise Spearman matrix (row-major n x n, unit diagonal).
std::vector<double> spearman_matrix(const MRFModel& model);

/// Probability that every component in `subset` defaults at the same
/// instant, with the truncation-error bound inherited from the gamma
/// convolution.
struct SimDefaultResult {
    double value = 0.0;
    double errorBound = 0.0;
};

/// Exact simultaneous-default probability of a component subset (>= 2
/// members): zero when no comonotone factor hits the whole subset; otherwise
/// alphaCommon(subset) * E[1/(totalShape + K)] where K follows the
/// Moschopoulos mixing law of the subset's factor-intensity total. Each
/// independent-hitting factor enters that total scaled by the number of
/// subset members it can kill (its restricted cardinality), i.e. as a gamma
/// component with rate 1/r_j.
SimDefaultResult simdefault_analytic(const MRFModel& model,
                                     const std::vector<std::size_t>& subset,
                                     double massTolerance = 1e-12);

struct MonteCarloEstimate {
    double mean = 0.0;
    double standardError = 0.0;
    std::size_t draws = 0;
};

/// Monte Carlo counterpart of simdefault_analytic: averages the conditional
/// simultaneous-default ratio over gamma draws of the factor intensities.
MonteCarloEstimate simdefault_mc(const MRFModel& model,
                                 const std::vector<std::size_t>& subset,
                                 std::size_t draws, std::uint64_t seed);

}  // namespace mrf
