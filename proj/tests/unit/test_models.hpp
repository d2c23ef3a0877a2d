// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Shared model factories for the unit tests. Every model here is small
// enough to reason about by hand; the derived quantities quoted in the
// tests (aggregated shapes, pair parameters) follow from the shapes below
// by simple addition.

#pragma once

#include <vector>

#include "mrf/model.hpp"

namespace mrftest {

using mrf::ExposureMatrix;
using mrf::FactorKind;
using mrf::MRFModel;
using mrf::RiskFactorSpec;

/// Two components, three comonotone masses (3.0 and 0.3 exclusive, 0.6
/// shared) plus a shared independent mass 0.5. Aggregated shapes 4.1, 1.4;
/// pair parameters (xiI, xiK, alpha, gamma, xiIbar, xiKbar)
/// = (4.1, 1.4, 0.6, 0.5, 3.0, 0.3).
inline MRFModel reference_pair() {
    return mrf::build_model(
        {{1, FactorKind::ComonotoneHitting, 3.0},
         {2, FactorKind::ComonotoneHitting, 0.3},
         {3, FactorKind::ComonotoneHitting, 0.6},
         {4, FactorKind::IndependentHitting, 0.5}},
        ExposureMatrix{2, 4, {1, 0, 1, 1, 0, 1, 1, 1}});
}

/// Same as reference_pair with the first exclusive mass raised to 10.0
/// (aggregated shapes 11.1, 1.4).
inline MRFModel lopsided_pair() {
    return mrf::build_model(
        {{1, FactorKind::ComonotoneHitting, 10.0},
         {2, FactorKind::ComonotoneHitting, 0.3},
         {3, FactorKind::ComonotoneHitting, 0.6},
         {4, FactorKind::IndependentHitting, 0.5}},
        ExposureMatrix{2, 4, {1, 0, 1, 1, 0, 1, 1, 1}});
}

/// Two components sharing one comonotone shock plus one idiosyncratic
/// comonotone shock each, all unit shapes. The classic common-shock
/// (Marshall-Olkin) survival structure with aggregated shapes 2, 2.
inline MRFModel marshall_olkin() {
    return mrf::build_model(
        {{1, FactorKind::ComonotoneHitting, 1.0},
         {2, FactorKind::ComonotoneHitting, 1.0},
         {3, FactorKind::ComonotoneHitting, 1.0}},
        ExposureMatrix{2, 3, {1, 1, 0, 1, 0, 1}});
}

/// Two components fully coupled through one comonotone and one independent
/// factor, both unit shapes (alpha = gamma = 1, no exclusive mass).
inline MRFModel mixed_pair() {
    return mrf::build_model({{1, FactorKind::ComonotoneHitting, 1.0},
                             {2, FactorKind::IndependentHitting, 1.0}},
                            ExposureMatrix{2, 2, {1, 1, 1, 1}});
}

/// n components hanging off a single independent-hitting factor: the
/// exchangeable Clayton Archimedean copula with parameter `shape`.
inline MRFModel archimedean(std::size_t n = 3, double shape = 0.8) {
    std::vector<std::uint8_t> entries(n, 1);
    return mrf::build_model({{1, FactorKind::IndependentHitting, shape}},
                            ExposureMatrix{n, 1, std::move(entries)});
}

/// n components hanging off a single comonotone-hitting factor: the
/// Frechet upper bound (perfect positive dependence).
inline MRFModel frechet(std::size_t n = 3, double shape = 1.5) {
    std::vector<std::uint8_t> entries(n, 1);
    return mrf::build_model({{1, FactorKind::ComonotoneHitting, shape}},
                            ExposureMatrix{n, 1, std::move(entries)});
}

/// Three components, each with its own private factor: independence.
inline MRFModel product3() {
    return mrf::build_model(
        {{1, FactorKind::ComonotoneHitting, 2.0},
         {2, FactorKind::ComonotoneHitting, 0.7},
         {3, FactorKind::IndependentHitting, 1.3}},
        ExposureMatrix{3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}});
}

/// Three components over five factors (two comonotone, three independent)
/// with an irregular exposure pattern; aggregated shapes 4.1, 4.2, 1.9.
inline MRFModel general_3x5() {
    return mrf::build_model(
        {{1, FactorKind::ComonotoneHitting, 1.2},
         {2, FactorKind::ComonotoneHitting, 0.4},
         {3, FactorKind::IndependentHitting, 0.9},
         {4, FactorKind::IndependentHitting, 0.6},
         {5, FactorKind::IndependentHitting, 2.0}},
        ExposureMatrix{3, 5,
                       {1, 0, 1, 0, 1,
                        1, 1, 0, 1, 1,
                        0, 1, 1, 1, 0}});
}

}  // namespace mrftest
