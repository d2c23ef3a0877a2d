// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/taildep.hpp"

#include <algorithm>
#include <cmath>

#include "mrf/copula.hpp"

namespace mrf {

namespace {

struct LogPathPoint {
    double logX = 0.0;
    double logPi = 0.0;
    PathRegime regime = PathRegime::Kink;
};

/// Upper-segment derivative sign function for oriented params (xiI >= xiK):
/// with deltaK = xiIbar/xiI - (xiKbar + alpha)/xiK, the objective
/// x -> C(x, u^2/x) on [kink, 1] has derivative with the sign of
///   eta(x) = (deltaK + gamma/xiI) - deltaK x^{1/xiI}
///          - ((alpha + gamma)/xiI) u^{-2/xiK} x^{1/xiI + 1/xiK},
/// which is non-increasing with eta(1) < 0. The objective is increasing on
/// [u^2, kink], so the maximizer is the kink when eta(kink) <= 0 and the
/// unique root of eta beyond it otherwise.
double eta_upper(const BivariateClaytonParams& p, double logU, double logX) {
    const double deltaK = p.xiIbar / p.xiI - (p.xiKbar + p.alphaCommon) / p.xiK;
    const double gammaOverXiI = p.gammaCommon / p.xiI;
    const double crossExp = logX * (1.0 / p.xiI + 1.0 / p.xiK) - 2.0 * logU / p.xiK;
    return (deltaK + gammaOverXiI) - deltaK * std::exp(logX / p.xiI) -
           (p.alphaCommon + p.gammaCommon) / p.xiI * std::exp(crossExp);
}

LogPathPoint maximal_path_log(const BivariateClaytonParams& p, double logU) {
    LogPathPoint point;
    if (p.xiCommon() == 0.0) {
        // No shared factors: C = x * u^2/x = u^2 on the whole family.
        point.logX = logU;
        point.logPi = 2.0 * logU;
        return point;
    }

    const double logKink = 2.0 * p.xiI / (p.xiI + p.xiK) * logU;
    const double deltaK = p.xiIbar / p.xiI - (p.xiKbar + p.alphaCommon) / p.xiK;
    const double v = std::exp(2.0 * logU / (p.xiI + p.xiK));
    const double etaAtKink = deltaK * (1.0 - v) - p.alphaCommon / p.xiI;

    if (etaAtKink <= 0.0) {
        point.logX = logKink;
        point.regime = PathRegime::Kink;
    } else {
        double lo = logKink;  // eta > 0 here
        double hi = 0.0;      // eta < 0 at x = 1
        for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
            const double mid = 0.5 * (lo + hi);
            (eta_upper(p, logU, mid) > 0.0 ? lo : hi) = mid;
        }
        point.logX = 0.5 * (lo + hi);
        point.regime = PathRegime::InteriorRoot;
    }
    point.logPi = log_bivariate_cdf(p, point.logX, 2.0 * logU - point.logX);
    return point;
}

void validate_pair_params(const BivariateClaytonParams& p) {
    if (!(p.xiI > 0.0) || !(p.xiK > 0.0)) {
        raise(ErrorCode::NonPositiveShape, "component total shapes must be positive");
    }
    if (p.alphaCommon < 0.0 || p.gammaCommon < 0.0 || p.xiIbar < 0.0 ||
        p.xiKbar < 0.0) {
        raise(ErrorCode::NonPositiveShape, "shape masses must be non-negative");
    }
}

}  // namespace

std::string_view to_string(PathRegime value) noexcept {
    return value == PathRegime::Kink ? "Kink" : "InteriorRoot";
}

ClassicalTailIndices classical_indices(const BivariateClaytonParams& params) {
    validate_pair_params(params);
    ClassicalTailIndices out;
    const double common = params.xiCommon();
    if (params.xiIbar == 0.0 && params.xiKbar == 0.0) {
        out.lambdaL = std::exp2(-params.gammaCommon);
    }
    if (common > 0.0) {
        out.chiL = common / std::max(params.xiI + params.xiIbar,
                                     params.xiK + params.xiKbar);
        out.kappaL = 2.0 - common / std::max(params.xiI, params.xiK);
    }
    return out;
}

MaximalTailIndices maximal_indices(const BivariateClaytonParams& params) {
    validate_pair_params(params);
    MaximalTailIndices out;
    const double common = params.xiCommon();
    out.lambdaStar = classical_indices(params).lambdaL;
    if (common > 0.0) {
        out.chiStar = common / (params.xiIbar + common + params.xiKbar);
        out.kappaStar =
            2.0 * (1.0 - common / (params.xiIbar + 2.0 * common + params.xiKbar));
    }
    return out;
}

TailIndices tail_indices(const BivariateClaytonParams& params) {
    const ClassicalTailIndices classical = classical_indices(params);
    const MaximalTailIndices maximal = maximal_indices(params);
    return {classical.lambdaL, classical.chiL,      classical.kappaL,
            maximal.lambdaStar, maximal.chiStar, maximal.kappaStar};
}

MaxDependencePoint maximal_path(const BivariateClaytonParams& params, double u) {
    validate_pair_params(params);
    if (!(u > 0.0) || !(u < 1.0)) {
        raise(ErrorCode::DomainError, "path parameter u must lie in (0, 1)");
    }
    const bool swapped = params.xiK > params.xiI;
    const BivariateClaytonParams oriented = swapped ? params.swapped() : params;
    const double logU = std::log(u);
    const LogPathPoint lp = maximal_path_log(oriented, logU);

    MaxDependencePoint out;
    out.u = u;
    out.xStar = std::exp(swapped ? 2.0 * logU - lp.logX : lp.logX);
    out.piStar = std::exp(lp.logPi);
    out.regime = lp.regime;
    return out;
}

double estimate_tail_exponent(const BivariateClaytonParams& params, TailPath path,
                              const std::vector<double>& uGrid) {
    validate_pair_params(params);
    if (uGrid.size() < 5) {
        raise(ErrorCode::DegenerateGrid, "slope estimation needs at least 5 points");
    }
    for (std::size_t i = 0; i < uGrid.size(); ++i) {
        if (!(uGrid[i] > 0.0) || uGrid[i] > 0.05) {
            raise(ErrorCode::DegenerateGrid, "grid points must lie in (0, 0.05]");
        }
        if (i > 0 && uGrid[i] >= uGrid[i - 1]) {
            raise(ErrorCode::DegenerateGrid, "grid must be strictly decreasing");
        }
    }
    if (uGrid.back() < 1e-8) {
        raise(ErrorCode::DegenerateGrid,
              "grid points below 1e-8 hit the cancellation floor");
    }
    if (uGrid.front() / uGrid.back() < 100.0) {
        raise(ErrorCode::DegenerateGrid, "grid must span at least two decades");
    }

    const bool swapped = params.xiK > params.xiI;
    const BivariateClaytonParams oriented = swapped ? params.swapped() : params;

    double sumX = 0.0;
    double sumY = 0.0;
    std::vector<double> xs(uGrid.size());
    std::vector<double> ys(uGrid.size());
    for (std::size_t i = 0; i < uGrid.size(); ++i) {
        const double logU = std::log(uGrid[i]);
        xs[i] = logU;
        ys[i] = path == TailPath::Diagonal
                    ? log_bivariate_cdf(oriented, logU, logU)
                    : maximal_path_log(oriented, logU).logPi;
        sumX += xs[i];
        sumY += ys[i];
    }
    const double meanX = sumX / static_cast<double>(xs.size());
    const double meanY = sumY / static_cast<double>(ys.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - meanX) * (xs[i] - meanX);
        sxy += (xs[i] - meanX) * (ys[i] - meanY);
    }
    return sxy / sxx;
}

}  // namespace mrf
