// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mrf/copula.hpp"
#include "mrf/gammaconv.hpp"
#include "mrf/rng.hpp"
#include "mrf/specfun.hpp"

namespace mrf {

namespace {

// 7-15 Gauss-Kronrod pair on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
};

template <typename F>
PanelResult gauss_kronrod(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double offset = half * kKronrodNodes[i];
        double fi = f(mid + offset);
        if (i < 7) fi += f(mid - offset);
        kronrod += kKronrodWeights[i] * fi;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fi;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::fabs(kronrod - gauss)};
}

/// Adaptive bisection quadrature driven by the Kronrod-Gauss discrepancy.
/// `budget` caps the total number of panels to keep failures loud.
template <typename F>
double adaptive_quad(const F& f, double a, double b, double tol, int depth,
                     int& budget) {
    if (--budget < 0) {
        raise(ErrorCode::QuadratureFailure, "adaptive quadrature panel budget exhausted");
    }
    const PanelResult p = gauss_kronrod(f, a, b);
    if (p.error <= tol || depth >= 48) {
        if (p.error > tol * 16.0 && depth >= 48) {
            raise(ErrorCode::QuadratureFailure,
                  "adaptive quadrature failed to converge on a panel");
        }
        return p.value;
    }
    const double mid = 0.5 * (a + b);
    return adaptive_quad(f, a, mid, 0.5 * tol, depth + 1, budget) +
           adaptive_quad(f, mid, b, 0.5 * tol, depth + 1, budget);
}

/// h(x) = 3F2(2x, 1, gamma; 2x + 1, b + 1; -1).
double spearman_h(double x, double gamma, double b) {
    HypergeometricSpec spec;
    spec.numeratorParams = {2.0 * x, 1.0, gamma};
    spec.denominatorParams = {2.0 * x + 1.0, b + 1.0};
    spec.argument = -1.0;
    return hyp_pfq(spec);
}

void validate_pair_params(const BivariateClaytonParams& p) {
    if (!(p.xiI > 0.0) || !(p.xiK > 0.0) || !std::isfinite(p.xiI) ||
        !std::isfinite(p.xiK)) {
        raise(ErrorCode::NonPositiveShape,
              "component total shapes must be positive and finite");
    }
    if (!(p.alphaCommon >= 0.0) || !(p.gammaCommon >= 0.0) ||
        !(p.xiIbar >= 0.0) || !(p.xiKbar >= 0.0)) {
        raise(ErrorCode::NonPositiveShape, "shape masses must be non-negative");
    }
}

}  // namespace

double spearman_rho(const BivariateClaytonParams& params) {
    validate_pair_params(params);
    const double b = 2.0 * params.xiI + 2.0 * params.xiK - params.xiCommon();
    const double hI = spearman_h(params.xiI, params.gammaCommon, b);
    const double hK = spearman_h(params.xiK, params.gammaCommon, b);
    double rho = (6.0 / b) * (params.xiK * hI + params.xiI * hK) - 3.0;
    if (rho < -1e-10 || rho > 1.0 + 1e-10) {
        raise(ErrorCode::NoConvergence,
              "Spearman series result escaped [0, 1] beyond tolerance");
    }
    return std::clamp(rho, 0.0, 1.0);
}

double spearman_rho_numeric(const BivariateClaytonParams& params, double tol) {
    validate_pair_params(params);
    if (!(tol >= 1e-10)) {
        raise(ErrorCode::InvalidTolerance,
              "quadrature tolerance must be at least 1e-10");
    }

    // Inner integral I(v) = int_0^1 C(u, v) du, split at the singular curve
    // u_c = v^{xiI/xiK}. On [0, u_c] substitute u = u_c e^{-x} (the integrand
    // is <= u_c^2 e^{-2x}, so truncating at x = 18 is far below tol).
    int budget = 200000;
    const double kinkPower = params.xiI / params.xiK;
    const auto inner = [&](double v) {
        const double uc = std::pow(v, kinkPower);
        const auto lowSeg = [&](double x) {
            const double u = uc * std::exp(-x);
            return bivariate_cdf(params, u, v) * u;
        };
        double low = adaptive_quad(lowSeg, 0.0, 18.0, tol / 64.0, 0, budget);
        const auto highSeg = [&](double u) { return bivariate_cdf(params, u, v); };
        double high = uc < 1.0
                          ? adaptive_quad(highSeg, uc, 1.0, tol / 64.0, 0, budget)
                          : 0.0;
        return low + high;
    };

    // Outer integral over v: same treatment, log substitution near 0.
    const auto lowOuter = [&](double y) {
        const double v = 0.5 * std::exp(-y);
        return inner(v) * v;
    };
    const auto highOuter = [&](double v) { return inner(v); };
    const double integral =
        adaptive_quad(lowOuter, 0.0, 18.0, tol / 4.0, 0, budget) +
        adaptive_quad(highOuter, 0.5, 1.0, tol / 4.0, 0, budget);
    return 12.0 * integral - 3.0;
}

double spearman_archimedean(const BivariateClaytonParams& params) {
    validate_pair_params(params);
    if (params.alphaCommon != 0.0) {
        raise(ErrorCode::PreconditionViolated,
              "closed Archimedean form needs no shared comonotone mass");
    }
    HypergeometricSpec spec;
    spec.numeratorParams = {1.0, 1.0, params.gammaCommon};
    spec.denominatorParams = {2.0 * params.xiI + 1.0, 2.0 * params.xiK + 1.0};
    spec.argument = 1.0;
    return 3.0 * (hyp_pfq(spec) - 1.0);
}

std::vector<double> spearman_matrix(const MRFModel& model) {
    const std::size_t n = model.component_count();
    std::vector<double> rho(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double value = spearman_rho(bivariate_params(model, i, k));
            rho[i * n + k] = value;
            rho[k * n + i] = value;
        }
    }
    return rho;
}

namespace {

struct SubsetMixture {
    SubsetSets sets;
    std::vector<GammaComponent> components;  // subset factor union
    double alphaCommon = 0.0;                // numerator shape
};

SubsetMixture subset_mixture(const MRFModel& model,
                             const std::vector<std::size_t>& subset) {
    if (subset.size() < 2) {
        raise(ErrorCode::SubsetTooSmall,
              "simultaneous default needs at least two components");
    }
    SubsetMixture mix;
    mix.sets = factor_sets(model, subset);
    for (std::size_t j : mix.sets.commonComonotone) {
        mix.alphaCommon += model.factors()[j].shape;
    }
    for (std::size_t j : mix.sets.all) {
        const double shape = model.factors()[j].shape;
        if (j < model.comonotone_count()) {
            mix.components.push_back({shape, 1.0});
        } else {
            const double r = static_cast<double>(mix.sets.restrictedCardinality[j]);
            mix.components.push_back({shape, 1.0 / r});
        }
    }
    return mix;
}

}  // namespace

SimDefaultResult simdefault_analytic(const MRFModel& model,
                                     const std::vector<std::size_t>& subset,
                                     double massTolerance) {
    const SubsetMixture mix = subset_mixture(model, subset);
    if (mix.alphaCommon == 0.0) return {0.0, 0.0};

    const ConvolutionPMF pmf = convolution_pmf(mix.components, massTolerance);
    const ExpectedRatio ratio = expected_ratio(pmf, mix.alphaCommon);
    return {ratio.value, ratio.errorBound};
}

MonteCarloEstimate simdefault_mc(const MRFModel& model,
                                 const std::vector<std::size_t>& subset,
                                 std::size_t draws, std::uint64_t seed) {
    if (draws == 0) {
        raise(ErrorCode::ZeroCount, "Monte Carlo draw count must be positive");
    }
    const SubsetMixture mix = subset_mixture(model, subset);

    double sum = 0.0;
    double sumSq = 0.0;
    for (std::size_t d = 0; d < draws; ++d) {
        double numerator = 0.0;
        double denominator = 0.0;
        for (std::size_t idx = 0; idx < mix.sets.all.size(); ++idx) {
            const std::size_t j = mix.sets.all[idx];
            const double lambda =
                SubstreamRng(seed, d, j).gamma(model.factors()[j].shape);
            // Independent-hitting factors count once per subset member they
            // can kill; comonotone factors count once.
            denominator += lambda / mix.components[idx].rate;
            if (std::binary_search(mix.sets.commonComonotone.begin(),
                                   mix.sets.commonComonotone.end(), j)) {
                numerator += lambda;
            }
        }
        const double ratio = numerator / denominator;
        sum += ratio;
        sumSq += ratio * ratio;
    }
    MonteCarloEstimate est;
    est.draws = draws;
    est.mean = sum / static_cast<double>(draws);
    if (draws > 1) {
        const double variance =
            std::max(0.0, (sumSq - sum * est.mean) / static_cast<double>(draws - 1));
        est.standardError = std::sqrt(variance / static_cast<double>(draws));
    }
    return est;
}

}  // namespace mrf
