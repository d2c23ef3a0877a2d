// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mrf/errors.hpp"

namespace mrf {

/// How a risk factor kills the components exposed to it once its latent
/// intensity is known: a comonotone-hitting factor fells all of its victims
/// at the same random instant (a common shock), while an independent-hitting
/// factor draws a separate clock per victim.
enum class FactorKind {
    ComonotoneHitting,
    IndependentHitting,
};

/// One systemic risk factor: a gamma-distributed intensity with the given
/// shape (rate fixed to 1) and a hitting discipline.
struct RiskFactorSpec {
    int id = 0;          ///< 1-based factor index as written in model files
    FactorKind kind = FactorKind::ComonotoneHitting;
    double shape = 0.0;  ///< gamma shape, > 0
};

/// Dense binary exposure matrix: entry (i, j) is 1 when component i can be
/// killed by factor j. Rows are components, columns follow the factor order.
struct ExposureMatrix {
    std::size_t components = 0;
    std::size_t factors = 0;
    std::vector<std::uint8_t> entries;  ///< row-major, components x factors

    std::uint8_t at(std::size_t component, std::size_t factor) const {
        return entries[component * factors + factor];
    }
};

/// Validated, immutable risk portfolio: factor specifications, exposure
/// matrix, and every derived index set and aggregated shape used by the
/// copula formulas. Build through build_model(); safe for concurrent reads.
class MRFModel {
public:
    std::size_t component_count() const noexcept { return exposure_.components; }
    std::size_t factor_count() const noexcept { return factors_.size(); }
    std::size_t comonotone_count() const noexcept { return comonotoneCount_; }
    std::size_t independent_count() const noexcept {
        return factors_.size() - comonotoneCount_;
    }

    const std::vector<RiskFactorSpec>& factors() const noexcept { return factors_; }
    const ExposureMatrix& exposure() const noexcept { return exposure_; }

    /// Comonotone-hitting factors component i is exposed to (0-based factor
    /// indices, ascending).
    const std::vector<std::size_t>& rf_comonotone(std::size_t i) const {
        return rfComonotone_.at(i);
    }
    /// Independent-hitting factors component i is exposed to.
    const std::vector<std::size_t>& rf_independent(std::size_t i) const {
        return rfIndependent_.at(i);
    }
    /// Components factor j can kill (0-based component indices, ascending).
    const std::vector<std::size_t>& rc(std::size_t j) const { return rcSets_.at(j); }

    /// Aggregated shape of component i: the sum of the shapes of every
    /// factor it is exposed to. Strictly positive for a valid model.
    double agg_shape(std::size_t i) const { return aggShape_.at(i); }

    /// Non-fatal validation notes (e.g. inert all-zero factor columns).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    friend MRFModel build_model(std::vector<RiskFactorSpec> factors,
                                ExposureMatrix exposure);

    std::vector<RiskFactorSpec> factors_;
    ExposureMatrix exposure_;
    std::size_t comonotoneCount_ = 0;
    std::vector<std::vector<std::size_t>> rfComonotone_;
    std::vector<std::vector<std::size_t>> rfIndependent_;
    std::vector<std::vector<std::size_t>> rcSets_;
    std::vector<double> aggShape_;
    std::vector<std::string> warnings_;
};

/// Factor index sets relevant to a component subset: factors attacking at
/// least one subset member (all), factors attacking every subset member
/// (common), and the remainder (rest = all minus common). Each set is also
/// split by hitting kind. restrictedCardinality[j] counts how many subset
/// members factor j can kill (0 when j is outside `all`).
struct SubsetSets {
    std::vector<std::size_t> subset;  ///< sorted 0-based component indices

    std::vector<std::size_t> all;
    std::vector<std::size_t> common;
    std::vector<std::size_t> rest;

    std::vector<std::size_t> allComonotone;
    std::vector<std::size_t> allIndependent;
    std::vector<std::size_t> commonComonotone;
    std::vector<std::size_t> commonIndependent;
    std::vector<std::size_t> restComonotone;
    std::vector<std::size_t> restIndependent;

    std::vector<std::size_t> restrictedCardinality;  ///< per factor
};

/// The six scalars that pin down the bivariate copula of a component pair
/// (i, k): total shapes, the shared comonotone and shared independent mass,
/// and the masses exclusive to each side. Additivity holds by construction:
/// xiI = xiIbar + alphaCommon + gammaCommon, and likewise for k.
struct BivariateClaytonParams {
    double xiI = 0.0;          ///< aggregated shape of component i
    double xiK = 0.0;          ///< aggregated shape of component k
    double alphaCommon = 0.0;  ///< comonotone shape shared by both
    double gammaCommon = 0.0;  ///< independent shape shared by both
    double xiIbar = 0.0;       ///< shape exclusive to i
    double xiKbar = 0.0;       ///< shape exclusive to k

    double xiCommon() const noexcept { return alphaCommon + gammaCommon; }

    /// Same pair viewed with the component labels exchanged.
    BivariateClaytonParams swapped() const noexcept {
        return {xiK, xiI, alphaCommon, gammaCommon, xiKbar, xiIbar};
    }
};

/// Validate inputs and derive every index set and aggregate. Factors must be
/// ordered with all comonotone-hitting factors first; the exposure matrix
/// must have one column per factor and no all-zero row.
MRFModel build_model(std::vector<RiskFactorSpec> factors, ExposureMatrix exposure);

/// Factor sets for a component subset (0-based component indices).
SubsetSets factor_sets(const MRFModel& model, std::vector<std::size_t> subset);

/// Bivariate parameter reduction for a distinct component pair (0-based).
BivariateClaytonParams bivariate_params(const MRFModel& model, std::size_t i,
                                        std::size_t k);

/// Parse a model from its JSON document text. The document holds a "factors"
/// array of {id, kind, shape} with kind "comonotone" or "independent", and an
/// "exposure" array of 0/1 rows (components x factors).
MRFModel parse_model(const std::string& jsonText);

/// Read and parse a model file.
MRFModel load_model(const std::string& path);

/// Canonical JSON serialization of a model (stable key order and factor
/// order; used for hashing and round-tripping).
std::string model_to_json(const MRFModel& model);

/// FNV-1a 64-bit digest of the canonical JSON form, as fixed-width hex.
std::string model_hash(const MRFModel& model);

}  // namespace mrf
