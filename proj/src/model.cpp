// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mrf {

namespace {

std::string_view kind_name(FactorKind kind) {
    return kind == FactorKind::ComonotoneHitting ? "comonotone" : "independent";
}

}  // namespace

MRFModel build_model(std::vector<RiskFactorSpec> factors, ExposureMatrix exposure) {
    if (factors.empty()) {
        raise(ErrorCode::DimensionMismatch, "model needs at least one factor");
    }
    if (exposure.components == 0) {
        raise(ErrorCode::DimensionMismatch, "model needs at least one component");
    }
    if (exposure.factors != factors.size()) {
        raise(ErrorCode::DimensionMismatch,
              "exposure matrix has " + std::to_string(exposure.factors) +
                  " columns but " + std::to_string(factors.size()) +
                  " factors were specified");
    }
    if (exposure.entries.size() != exposure.components * exposure.factors) {
        raise(ErrorCode::DimensionMismatch, "exposure matrix storage size mismatch");
    }

    // Factors must come comonotone-first so column blocks match the kind
    // split; this also normalizes the ids used in derived formulas.
    std::size_t comonotone = 0;
    bool seenIndependent = false;
    for (const RiskFactorSpec& f : factors) {
        if (!(f.shape > 0.0) || !std::isfinite(f.shape)) {
            raise(ErrorCode::NonPositiveShape,
                  "factor " + std::to_string(f.id) +
                      " needs a positive finite shape");
        }
        if (f.kind == FactorKind::ComonotoneHitting) {
            if (seenIndependent) {
                raise(ErrorCode::BadModelFile,
                      "factors must be ordered comonotone-first; factor " +
                          std::to_string(f.id) + " is out of order");
            }
            ++comonotone;
        } else {
            seenIndependent = true;
        }
    }

    MRFModel model;
    model.factors_ = std::move(factors);
    model.exposure_ = std::move(exposure);
    model.comonotoneCount_ = comonotone;

    const std::size_t n = model.exposure_.components;
    const std::size_t F = model.factors_.size();
    model.rfComonotone_.resize(n);
    model.rfIndependent_.resize(n);
    model.rcSets_.resize(F);
    model.aggShape_.assign(n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        bool exposed = false;
        for (std::size_t j = 0; j < F; ++j) {
            if (model.exposure_.at(i, j) == 0) continue;
            exposed = true;
            if (j < comonotone) {
                model.rfComonotone_[i].push_back(j);
            } else {
                model.rfIndependent_[i].push_back(j);
            }
            model.rcSets_[j].push_back(i);
            model.aggShape_[i] += model.factors_[j].shape;
        }
        if (!exposed) {
            raise(ErrorCode::EmptyRow,
                  "component " + std::to_string(i + 1) + " is exposed to no factor");
        }
    }
    for (std::size_t j = 0; j < F; ++j) {
        if (model.rcSets_[j].empty()) {
            model.warnings_.push_back("factor " + std::to_string(model.factors_[j].id) +
                                      " is inert (no component is exposed to it)");
        }
    }
    return model;
}

SubsetSets factor_sets(const MRFModel& model, std::vector<std::size_t> subset) {
    if (subset.empty()) {
        raise(ErrorCode::SubsetTooSmall, "component subset must be nonempty");
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
        raise(ErrorCode::DuplicateIndex, "component subset contains duplicates");
    }
    if (subset.back() >= model.component_count()) {
        raise(ErrorCode::IndexOutOfRange,
              "component index " + std::to_string(subset.back() + 1) +
                  " outside model with " + std::to_string(model.component_count()) +
                  " components");
    }

    const std::size_t F = model.factor_count();
    SubsetSets sets;
    sets.subset = std::move(subset);
    sets.restrictedCardinality.assign(F, 0);

    for (std::size_t j = 0; j < F; ++j) {
        std::size_t hits = 0;
        for (std::size_t i : sets.subset) {
            if (model.exposure().at(i, j) != 0) ++hits;
        }
        sets.restrictedCardinality[j] = hits;
        if (hits == 0) continue;

        const bool comonotone = j < model.comonotone_count();
        sets.all.push_back(j);
        (comonotone ? sets.allComonotone : sets.allIndependent).push_back(j);
        if (hits == sets.subset.size()) {
            sets.common.push_back(j);
            (comonotone ? sets.commonComonotone : sets.commonIndependent).push_back(j);
        } else {
            sets.rest.push_back(j);
            (comonotone ? sets.restComonotone : sets.restIndependent).push_back(j);
        }
    }
    return sets;
}

BivariateClaytonParams bivariate_params(const MRFModel& model, std::size_t i,
                                        std::size_t k) {
    if (i >= model.component_count() || k >= model.component_count()) {
        raise(ErrorCode::IndexOutOfRange, "component pair outside model");
    }
    if (i == k) {
        raise(ErrorCode::EqualIndices, "pair query needs two distinct components");
    }

    BivariateClaytonParams p;
    p.xiI = model.agg_shape(i);
    p.xiK = model.agg_shape(k);
    for (std::size_t j = 0; j < model.factor_count(); ++j) {
        const bool hitsI = model.exposure().at(i, j) != 0;
        const bool hitsK = model.exposure().at(k, j) != 0;
        if (!hitsI && !hitsK) continue;
        const double shape = model.factors()[j].shape;
        if (hitsI && hitsK) {
            if (j < model.comonotone_count()) {
                p.alphaCommon += shape;
            } else {
                p.gammaCommon += shape;
            }
        } else if (hitsI) {
            p.xiIbar += shape;
        } else {
            p.xiKbar += shape;
        }
    }
    return p;
}

MRFModel parse_model(const std::string& jsonText) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(jsonText);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::BadModelFile, std::string("model JSON malformed: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("factors") || !doc.contains("exposure")) {
            raise(ErrorCode::BadModelFile,
                  "model JSON must contain \"factors\" and \"exposure\"");
        }
        std::vector<RiskFactorSpec> factors;
        for (const auto& f : doc.at("factors")) {
            RiskFactorSpec spec;
            spec.id = f.at("id").get<int>();
            const std::string kind = f.at("kind").get<std::string>();
            if (kind == "comonotone") {
                spec.kind = FactorKind::ComonotoneHitting;
            } else if (kind == "independent") {
                spec.kind = FactorKind::IndependentHitting;
            } else {
                raise(ErrorCode::BadModelFile,
                      "factor kind must be \"comonotone\" or \"independent\", got \"" +
                          kind + "\"");
            }
            spec.shape = f.at("shape").get<double>();
            factors.push_back(spec);
        }

        const auto& rows = doc.at("exposure");
        ExposureMatrix exposure;
        exposure.components = rows.size();
        exposure.factors = factors.size();
        exposure.entries.reserve(exposure.components * exposure.factors);
        for (const auto& row : rows) {
            if (row.size() != factors.size()) {
                raise(ErrorCode::DimensionMismatch,
                      "exposure row length does not match factor count");
            }
            for (const auto& cell : row) {
                const int v = cell.get<int>();
                if (v != 0 && v != 1) {
                    raise(ErrorCode::BadModelFile, "exposure entries must be 0 or 1");
                }
                exposure.entries.push_back(static_cast<std::uint8_t>(v));
            }
        }
        return build_model(std::move(factors), std::move(exposure));
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::BadModelFile, std::string("model JSON invalid: ") + e.what());
    }
}

MRFModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(ErrorCode::IoFailure, "cannot open model file", path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) {
        raise(ErrorCode::IoFailure, "cannot read model file", path);
    }
    return parse_model(text.str());
}

std::string model_to_json(const MRFModel& model) {
    nlohmann::json doc;
    doc["factors"] = nlohmann::json::array();
    for (const RiskFactorSpec& f : model.factors()) {
        doc["factors"].push_back({{"id", f.id},
                                  {"kind", std::string(kind_name(f.kind))},
                                  {"shape", f.shape}});
    }
    doc["exposure"] = nlohmann::json::array();
    for (std::size_t i = 0; i < model.component_count(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < model.factor_count(); ++j) {
            row.push_back(static_cast<int>(model.exposure().at(i, j)));
        }
        doc["exposure"].push_back(row);
    }
    return doc.dump();
}

std::string model_hash(const MRFModel& model) {
    const std::string canonical = model_to_json(model);
    // FNV-1a, 64-bit.
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : canonical) {
        hash ^= static_cast<std::uint64_t>(c);
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

}  // namespace mrf
