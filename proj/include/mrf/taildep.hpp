// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "mrf/model.hpp"

namespace mrf {

/// Classical (diagonal) lower-tail indices.
struct ClassicalTailIndices {
    double lambdaL = 0.0;  ///< strong index, lim C(u,u)/u
    double chiL = 0.0;     ///< weak index
    double kappaL = 2.0;   ///< diagonal decay exponent, C(u,u) ~ l(u) u^kappaL
};

/// Maximal (prudent) lower-tail indices along the path of maximal dependence.
struct MaximalTailIndices {
    double lambdaStar = 0.0;
    double chiStar = 0.0;
    double kappaStar = 2.0;
};

/// Both triples side by side. Always: kappaStar <= kappaL,
/// chiStar >= chiL, and chi = 2/kappa - 1 within each triple.
struct TailIndices {
    double lambdaL = 0.0;
    double chiL = 0.0;
    double kappaL = 2.0;
    double lambdaStar = 0.0;
    double chiStar = 0.0;
    double kappaStar = 2.0;
};

/// How the copula mass maximizer over {(x, u^2/x)} was found: at the kink of
/// the singular curve, or as the interior root of the upper-segment
/// derivative.
enum class PathRegime {
    Kink,
    InteriorRoot,
};

std::string_view to_string(PathRegime value) noexcept;

/// One point of the path of maximal dependence: the maximizer x* of
/// x -> C(x, u^2/x) over [u^2, 1] and the attained value Pi*(u).
struct MaxDependencePoint {
    double u = 0.0;
    double xStar = 0.0;   ///< in [u^2, 1]
    double piStar = 0.0;  ///< C(x*, u^2/x*) >= C(u, u)
    PathRegime regime = PathRegime::Kink;
};

/// Which curve a tail probe walks: the diagonal (u, u) or the path of
/// maximal dependence.
enum class TailPath {
    Diagonal,
    Maximal,
};

/// Diagonal indices:
///   lambdaL = 2^{-gammaCommon} when both exclusive masses are zero, else 0;
///   chiL    = xiCommon / max(xiI + xiIbar, xiK + xiKbar);
///   kappaL  = 2 - xiCommon / max(xiI, xiK).
ClassicalTailIndices classical_indices(const BivariateClaytonParams& params);

/// Maximal indices:
///   lambdaStar = lambdaL;
///   chiStar    = xiCommon / (xiIbar + xiCommon + xiKbar);
///   kappaStar  = 2 (1 - xiCommon / (xiIbar + 2 xiCommon + xiKbar)).
MaximalTailIndices maximal_indices(const BivariateClaytonParams& params);

/// Convenience: both triples at once.
TailIndices tail_indices(const BivariateClaytonParams& params);

/// Maximize x -> C(x, u^2/x) over the admissible rectangle diagonal family.
/// Orientation convention: computed with xiI >= xiK (swapping internally if
/// needed); the reported xStar is in the caller's original orientation. The
/// lower segment of the objective is increasing, so the maximizer is either
/// the singular kink x = u^{2 xiI/(xiI + xiK)} or the unique interior root of
/// the upper-segment derivative, bracketed and bisected in log x to 1e-14
/// relative. With no shared factors the objective is flat (C = u^2 on the
/// whole family) and the diagonal point is returned.
MaxDependencePoint maximal_path(const BivariateClaytonParams& params, double u);

/// Least-squares slope of log Pi(u) against log u over a decreasing grid,
/// where Pi walks the chosen path. Used as the numeric oracle for kappaL and
/// kappaStar. The grid must hold at least 5 points inside (0, 0.05], span at
/// least two decades, and stay above 1e-8 (cancellation floor); otherwise
/// DegenerateGrid is raised.
double estimate_tail_exponent(const BivariateClaytonParams& params,
                              TailPath path, const std::vector<double>& uGrid);

}  // namespace mrf
