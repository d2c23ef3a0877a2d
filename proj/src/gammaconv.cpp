// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/gammaconv.hpp"

#include <algorithm>
#include <cmath>

namespace mrf {

namespace {

constexpr std::size_t kTruncationCap = 100000;

}  // namespace

ConvolutionPMF convolution_pmf(const std::vector<GammaComponent>& components,
                               double massTolerance) {
    if (components.empty()) {
        raise(ErrorCode::PreconditionViolated, "convolution needs at least one component");
    }
    if (!(massTolerance > 0.0) || massTolerance >= 1.0) {
        raise(ErrorCode::InvalidTolerance, "massTolerance must lie in (0, 1)");
    }
    for (const GammaComponent& c : components) {
        if (!(c.shape > 0.0)) {
            raise(ErrorCode::NonPositiveShape, "gamma component shape must be positive");
        }
        if (!(c.rate > 0.0) || !std::isfinite(c.rate)) {
            raise(ErrorCode::DomainError, "gamma component rate must be positive");
        }
    }

    ConvolutionPMF pmf;
    pmf.sigmaMax = 0.0;
    for (const GammaComponent& c : components) {
        pmf.sigmaMax = std::max(pmf.sigmaMax, c.rate);
        pmf.totalShape += c.shape;
    }

    // log c+ = sum_i shape_i log(rate_i / sigmaMax); components at the
    // maximal rate contribute nothing to either c+ or the g_l sums.
    double logCPlus = 0.0;
    std::vector<double> shapes;
    std::vector<double> ratios;  // 1 - rate_i/sigmaMax, in (0, 1)
    for (const GammaComponent& c : components) {
        const double r = c.rate / pmf.sigmaMax;
        if (r < 1.0) {
            logCPlus += c.shape * std::log(r);
            shapes.push_back(c.shape);
            ratios.push_back(1.0 - r);
        }
    }
    pmf.cPlus = std::exp(logCPlus);

    pmf.deltas.push_back(1.0);
    pmf.probs.push_back(pmf.cPlus);
    double mass = pmf.cPlus;

    if (ratios.empty()) {
        // All rates equal: K = 0 almost surely.
        pmf.truncationK = 0;
        pmf.massDeficit = 0.0;
        pmf.probs[0] = 1.0;
        pmf.cPlus = 1.0;
        return pmf;
    }

    std::vector<double> g;          // g_l, 1-based in l (g[0] unused)
    std::vector<double> ratioPow =  // running ratios[i]^l
        ratios;
    g.push_back(0.0);

    std::size_t k = 0;
    while (1.0 - mass > massTolerance) {
        if (k >= kTruncationCap) {
            raise(ErrorCode::NoConvergence,
                  "gamma convolution mass did not reach tolerance within the term cap");
        }
        ++k;
        double gk = 0.0;
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            gk += shapes[i] * ratioPow[i];
            ratioPow[i] *= ratios[i];
        }
        g.push_back(gk);

        double deltaK = 0.0;
        for (std::size_t l = 1; l <= k; ++l) {
            deltaK += g[l] * pmf.deltas[k - l];
        }
        deltaK /= static_cast<double>(k);
        pmf.deltas.push_back(deltaK);
        pmf.probs.push_back(pmf.cPlus * deltaK);
        mass += pmf.probs.back();
    }

    pmf.truncationK = k;
    pmf.massDeficit = std::max(0.0, 1.0 - mass);
    return pmf;
}

ExpectedRatio expected_ratio(const ConvolutionPMF& pmf, double numeratorShape) {
    if (numeratorShape < 0.0) {
        raise(ErrorCode::DomainError, "numerator shape must be non-negative");
    }
    ExpectedRatio out;
    if (numeratorShape == 0.0) return out;

    for (std::size_t k = 0; k < pmf.probs.size(); ++k) {
        out.value += pmf.probs[k] / (pmf.totalShape + static_cast<double>(k));
    }
    out.value *= numeratorShape;
    out.errorBound = numeratorShape * pmf.massDeficit / pmf.totalShape;
    return out;
}

}  // namespace mrf
