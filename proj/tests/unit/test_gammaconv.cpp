// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Gamma-convolution mixing law: the delta recursion against closed-form
// convolutions, moment identities, truncation accounting, and the expected
// reciprocal functional.

#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "mrf/gammaconv.hpp"

using namespace mrf;

namespace {

bool raises(ErrorCode expected, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == expected;
    }
    return false;
}

/// Density of the gamma mixture representation at x.
double mixture_density(const ConvolutionPMF& pmf, double x) {
    double f = 0.0;
    for (std::size_t k = 0; k < pmf.probs.size(); ++k) {
        const double a = pmf.totalShape + static_cast<double>(k);
        f += pmf.probs[k] *
             std::exp(a * std::log(pmf.sigmaMax) + (a - 1.0) * std::log(x) -
                      pmf.sigmaMax * x - std::lgamma(a));
    }
    return f;
}

}  // namespace

TEST_CASE("convolution_pmf with equal rates is a plain gamma, exactly") {
    const ConvolutionPMF pmf = convolution_pmf(
        {{1.5, 0.7}, {2.25, 0.7}, {0.3, 0.7}});
    CHECK(pmf.probs == std::vector<double>{1.0});
    CHECK(pmf.deltas == std::vector<double>{1.0});
    CHECK(pmf.cPlus == 1.0);
    CHECK(pmf.massDeficit == 0.0);
    CHECK(pmf.truncationK == 0);
    CHECK(pmf.sigmaMax == 0.7);
    CHECK(pmf.totalShape == doctest::Approx(4.05).epsilon(1e-15));
}

TEST_CASE("convolution_pmf reproduces the two-exponential mixing weights") {
    // Exp(1) + Exp(2): c+ = 1/2, g_l = 2^{-l}, so delta_k = 2^{-k} and the
    // mixing weights are p_k = 2^{-(k+1)}.
    const ConvolutionPMF pmf = convolution_pmf({{1.0, 1.0}, {1.0, 2.0}});
    CHECK(pmf.sigmaMax == 2.0);
    CHECK(pmf.totalShape == 2.0);
    CHECK(pmf.cPlus == doctest::Approx(0.5).epsilon(1e-15));
    REQUIRE(pmf.probs.size() >= 10);
    for (std::size_t k = 0; k < 10; ++k) {
        CHECK(pmf.probs[k] ==
              doctest::Approx(std::ldexp(1.0, -static_cast<int>(k) - 1))
                  .epsilon(1e-13));
    }
    CHECK(pmf.massDeficit >= 0.0);
    CHECK(pmf.massDeficit <= 1e-12);

    double mass = 0.0;
    for (double p : pmf.probs) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        mass += p;
    }
    CHECK(mass == doctest::Approx(1.0 - pmf.massDeficit).epsilon(1e-14));

    for (std::size_t k = 0; k < pmf.probs.size(); ++k) {
        CHECK(pmf.probs[k] ==
              doctest::Approx(pmf.cPlus * pmf.deltas[k]).epsilon(1e-15));
    }
}

TEST_CASE("mixture density matches the closed-form convolution density") {
    // The density of Exp(1) + Exp(2) is 2(e^{-x} - e^{-2x}).
    const ConvolutionPMF pmf = convolution_pmf({{1.0, 1.0}, {1.0, 2.0}});
    for (double x : {0.05, 0.3, 0.8, 1.0, 1.7, 2.5, 4.0, 6.0}) {
        const double exact = 2.0 * (std::exp(-x) - std::exp(-2.0 * x));
        CHECK(mixture_density(pmf, x) ==
              doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("mixture moments match the underlying independent sum") {
    // Mean and variance of a sum of independent gammas are sums of
    // component means/variances; the mixture must carry the same moments.
    const std::vector<GammaComponent> comps{{0.7, 2.0}, {1.3, 0.5}, {2.1, 1.0}};
    const ConvolutionPMF pmf = convolution_pmf(comps);

    double mean = 0.0, var = 0.0;
    for (const GammaComponent& c : comps) {
        mean += c.shape / c.rate;
        var += c.shape / (c.rate * c.rate);
    }
    const double secondMoment = var + mean * mean;

    double mixMean = 0.0, mixSecond = 0.0;
    for (std::size_t k = 0; k < pmf.probs.size(); ++k) {
        const double a = pmf.totalShape + static_cast<double>(k);
        mixMean += pmf.probs[k] * a / pmf.sigmaMax;
        mixSecond += pmf.probs[k] * a * (a + 1.0) /
                     (pmf.sigmaMax * pmf.sigmaMax);
    }
    CHECK(mixMean == doctest::Approx(mean).epsilon(1e-8));
    CHECK(mixSecond == doctest::Approx(secondMoment).epsilon(1e-6));
}

TEST_CASE("convolution_pmf tightens with the requested tolerance") {
    const ConvolutionPMF loose = convolution_pmf({{1.0, 1.0}, {1.0, 2.0}}, 1e-6);
    const ConvolutionPMF tight = convolution_pmf({{1.0, 1.0}, {1.0, 2.0}}, 1e-14);
    CHECK(loose.massDeficit <= 1e-6);
    CHECK(tight.massDeficit <= 1e-14);
    CHECK(tight.truncationK > loose.truncationK);
    // Shared prefix: tightening only appends weights.
    for (std::size_t k = 0; k < loose.probs.size(); ++k) {
        CHECK(tight.probs[k] ==
              doctest::Approx(loose.probs[k]).epsilon(1e-15));
    }
}

TEST_CASE("convolution_pmf input validation") {
    CHECK(raises(ErrorCode::PreconditionViolated,
                 [] { convolution_pmf({}); }));
    CHECK(raises(ErrorCode::NonPositiveShape,
                 [] { convolution_pmf({{0.0, 1.0}}); }));
    CHECK(raises(ErrorCode::NonPositiveShape,
                 [] { convolution_pmf({{-2.0, 1.0}}); }));
    CHECK(raises(ErrorCode::DomainError,
                 [] { convolution_pmf({{1.0, 0.0}}); }));
    CHECK(raises(ErrorCode::DomainError,
                 [] { convolution_pmf({{1.0, std::nan("")}}); }));
    CHECK(raises(ErrorCode::InvalidTolerance,
                 [] { convolution_pmf({{1.0, 1.0}}, 0.0); }));
    CHECK(raises(ErrorCode::InvalidTolerance,
                 [] { convolution_pmf({{1.0, 1.0}}, 1.0); }));
}

TEST_CASE("convolution_pmf reports NoConvergence for extreme rate ratios") {
    // With rates 1 and 1e6 the geometric decay factor is 1 - 1e-6: tens of
    // millions of terms would be needed, far past the internal cap.
    CHECK(raises(ErrorCode::NoConvergence, [] {
        convolution_pmf({{0.5, 1.0}, {0.5, 1e6}});
    }));
}

TEST_CASE("expected_ratio evaluates the reciprocal-shift functional") {
    // For the Exp(1)+Exp(2) mixture with unit numerator shape the exact
    // value is sum_k 2^{-(k+1)}/(2+k) = 2 log 2 - 1.
    const ConvolutionPMF pmf = convolution_pmf({{1.0, 1.0}, {1.0, 2.0}});
    const ExpectedRatio r = expected_ratio(pmf, 1.0);
    const double exact = 2.0 * std::log(2.0) - 1.0;
    CHECK(r.value == doctest::Approx(exact).epsilon(1e-11));
    CHECK(std::fabs(r.value - exact) <= r.errorBound + 1e-13);
    CHECK(r.errorBound ==
          doctest::Approx(1.0 * pmf.massDeficit / pmf.totalShape)
              .epsilon(1e-15));

    // The functional is linear in the numerator shape.
    const ExpectedRatio twice = expected_ratio(pmf, 2.0);
    CHECK(twice.value == doctest::Approx(2.0 * r.value).epsilon(1e-15));

    const ExpectedRatio zero = expected_ratio(pmf, 0.0);
    CHECK(zero.value == 0.0);
    CHECK(zero.errorBound == 0.0);

    CHECK(raises(ErrorCode::DomainError,
                 [&] { expected_ratio(pmf, -1.0); }));
}
