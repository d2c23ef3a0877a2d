// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Model construction, validation, index-set derivation, the bivariate
// parameter reduction, JSON parsing/serialization, and the model digest.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "mrf/model.hpp"
#include "test_models.hpp"

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

}  // namespace

TEST_CASE("build_model derives counts, index sets, and aggregated shapes") {
    const MRFModel m = mrftest::general_3x5();

    CHECK(m.component_count() == 3);
    CHECK(m.factor_count() == 5);
    CHECK(m.comonotone_count() == 2);
    CHECK(m.independent_count() == 3);

    // Row 0 = [1,0,1,0,1]: comonotone factor 0, independent factors 2 and 4.
    CHECK(m.rf_comonotone(0) == std::vector<std::size_t>{0});
    CHECK(m.rf_independent(0) == std::vector<std::size_t>{2, 4});
    CHECK(m.rf_comonotone(1) == std::vector<std::size_t>{0, 1});
    CHECK(m.rf_independent(1) == std::vector<std::size_t>{3, 4});
    CHECK(m.rf_comonotone(2) == std::vector<std::size_t>{1});
    CHECK(m.rf_independent(2) == std::vector<std::size_t>{2, 3});

    // Column reads: factor 0 kills components {0,1}, factor 4 kills {0,1}.
    CHECK(m.rc(0) == std::vector<std::size_t>{0, 1});
    CHECK(m.rc(1) == std::vector<std::size_t>{1, 2});
    CHECK(m.rc(2) == std::vector<std::size_t>{0, 2});
    CHECK(m.rc(3) == std::vector<std::size_t>{1, 2});
    CHECK(m.rc(4) == std::vector<std::size_t>{0, 1});

    CHECK(m.agg_shape(0) == doctest::Approx(1.2 + 0.9 + 2.0).epsilon(1e-15));
    CHECK(m.agg_shape(1) == doctest::Approx(1.2 + 0.4 + 0.6 + 2.0).epsilon(1e-15));
    CHECK(m.agg_shape(2) == doctest::Approx(0.4 + 0.9 + 0.6).epsilon(1e-15));
    CHECK(m.warnings().empty());
}

TEST_CASE("build_model rejects malformed inputs") {
    auto factors = std::vector<RiskFactorSpec>{
        {1, FactorKind::ComonotoneHitting, 1.0}};

    CHECK(raises(ErrorCode::DimensionMismatch, [] {
        build_model({}, ExposureMatrix{1, 0, {}});
    }));
    CHECK(raises(ErrorCode::DimensionMismatch, [&] {
        build_model(factors, ExposureMatrix{0, 1, {}});
    }));
    // Entry count must equal components x factors.
    CHECK(raises(ErrorCode::DimensionMismatch, [&] {
        build_model(factors, ExposureMatrix{2, 1, {1}});
    }));

    for (double shape : {0.0, -1.0, std::nan(""),
                         std::numeric_limits<double>::infinity()}) {
        CHECK(raises(ErrorCode::NonPositiveShape, [&] {
            build_model({{1, FactorKind::ComonotoneHitting, shape}},
                        ExposureMatrix{1, 1, {1}});
        }));
    }

    // A component exposed to nothing has no distribution.
    CHECK(raises(ErrorCode::EmptyRow, [&] {
        build_model(factors, ExposureMatrix{2, 1, {1, 0}});
    }));

    // Factor ordering is part of the file format: comonotone block first.
    CHECK(raises(ErrorCode::BadModelFile, [] {
        build_model({{1, FactorKind::IndependentHitting, 1.0},
                     {2, FactorKind::ComonotoneHitting, 1.0}},
                    ExposureMatrix{1, 2, {1, 1}});
    }));
}

TEST_CASE("build_model flags inert factors as warnings, not errors") {
    const MRFModel m = build_model({{1, FactorKind::ComonotoneHitting, 1.0},
                                    {2, FactorKind::ComonotoneHitting, 2.0}},
                                   ExposureMatrix{1, 2, {1, 0}});
    REQUIRE(m.warnings().size() == 1);
    CHECK(m.warnings()[0].find("factor 2") != std::string::npos);
    CHECK(m.agg_shape(0) == doctest::Approx(1.0));
}

TEST_CASE("factor_sets splits factors into all/common/rest with cardinalities") {
    const MRFModel m = mrftest::general_3x5();

    SUBCASE("pair {0,1}") {
        const SubsetSets s = factor_sets(m, {1, 0});  // order-insensitive
        CHECK(s.subset == std::vector<std::size_t>{0, 1});
        CHECK(s.all == std::vector<std::size_t>{0, 1, 2, 3, 4});
        CHECK(s.common == std::vector<std::size_t>{0, 4});
        CHECK(s.rest == std::vector<std::size_t>{1, 2, 3});
        CHECK(s.commonComonotone == std::vector<std::size_t>{0});
        CHECK(s.commonIndependent == std::vector<std::size_t>{4});
        CHECK(s.restComonotone == std::vector<std::size_t>{1});
        CHECK(s.restIndependent == std::vector<std::size_t>{2, 3});
        CHECK(s.restrictedCardinality ==
              std::vector<std::size_t>{2, 1, 1, 1, 2});
    }

    SUBCASE("full subset {0,1,2}") {
        const SubsetSets s = factor_sets(m, {0, 1, 2});
        CHECK(s.all == std::vector<std::size_t>{0, 1, 2, 3, 4});
        CHECK(s.common.empty());  // no factor attacks all three
        CHECK(s.rest == std::vector<std::size_t>{0, 1, 2, 3, 4});
        CHECK(s.restrictedCardinality ==
              std::vector<std::size_t>{2, 2, 2, 2, 2});
    }

    SUBCASE("validation") {
        CHECK(raises(ErrorCode::SubsetTooSmall,
                     [&] { factor_sets(m, {}); }));
        CHECK(raises(ErrorCode::DuplicateIndex,
                     [&] { factor_sets(m, {0, 0}); }));
        CHECK(raises(ErrorCode::IndexOutOfRange,
                     [&] { factor_sets(m, {0, 3}); }));
    }
}

TEST_CASE("bivariate_params additivity and known reduction") {
    const MRFModel m = mrftest::reference_pair();
    const BivariateClaytonParams p = bivariate_params(m, 0, 1);

    CHECK(p.xiI == doctest::Approx(4.1).epsilon(1e-15));
    CHECK(p.xiK == doctest::Approx(1.4).epsilon(1e-15));
    CHECK(p.alphaCommon == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(p.gammaCommon == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.xiIbar == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(p.xiKbar == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(p.xiCommon() == doctest::Approx(1.1).epsilon(1e-15));

    // Additivity: each total is exclusive + shared mass.
    CHECK(p.xiI ==
          doctest::Approx(p.xiIbar + p.alphaCommon + p.gammaCommon));
    CHECK(p.xiK ==
          doctest::Approx(p.xiKbar + p.alphaCommon + p.gammaCommon));

    const BivariateClaytonParams q = p.swapped();
    CHECK(q.xiI == p.xiK);
    CHECK(q.xiK == p.xiI);
    CHECK(q.xiIbar == p.xiKbar);
    CHECK(q.alphaCommon == p.alphaCommon);
    CHECK(q.gammaCommon == p.gammaCommon);

    // Reduction is symmetric in the pair order.
    const BivariateClaytonParams r = bivariate_params(m, 1, 0);
    CHECK(r.xiI == p.xiK);
    CHECK(r.xiKbar == p.xiIbar);

    CHECK(raises(ErrorCode::EqualIndices,
                 [&] { bivariate_params(m, 1, 1); }));
    CHECK(raises(ErrorCode::IndexOutOfRange,
                 [&] { bivariate_params(m, 0, 2); }));
}

TEST_CASE("parse_model accepts the documented schema") {
    const std::string text = R"({
      "factors": [
        {"id": 1, "kind": "comonotone", "shape": 3.0},
        {"id": 2, "kind": "comonotone", "shape": 0.3},
        {"id": 3, "kind": "comonotone", "shape": 0.6},
        {"id": 4, "kind": "independent", "shape": 0.5}
      ],
      "exposure": [[1, 0, 1, 1], [0, 1, 1, 1]]
    })";
    const MRFModel m = parse_model(text);
    CHECK(m.component_count() == 2);
    CHECK(m.factor_count() == 4);
    CHECK(m.agg_shape(0) == doctest::Approx(4.1));

    // Same content as the factory model: identical digest.
    CHECK(model_hash(m) == model_hash(mrftest::reference_pair()));
}

TEST_CASE("parse_model rejects malformed documents") {
    CHECK(raises(ErrorCode::BadModelFile, [] { parse_model("{not json"); }));
    CHECK(raises(ErrorCode::BadModelFile, [] { parse_model("[]"); }));
    // Structurally empty documents bottom out in the dimension checks.
    CHECK(raises(ErrorCode::DimensionMismatch, [] {
        parse_model(R"({"factors": [], "exposure": []})");
    }));
    // Unknown hitting kind.
    CHECK(raises(ErrorCode::BadModelFile, [] {
        parse_model(R"({"factors": [{"id":1,"kind":"mystery","shape":1.0}],
                        "exposure": [[1]]})");
    }));
    // Exposure entries must be 0 or 1.
    CHECK(raises(ErrorCode::BadModelFile, [] {
        parse_model(R"({"factors": [{"id":1,"kind":"comonotone","shape":1.0}],
                        "exposure": [[2]]})");
    }));
    // Ragged exposure rows.
    CHECK(raises(ErrorCode::DimensionMismatch, [] {
        parse_model(R"({"factors": [{"id":1,"kind":"comonotone","shape":1.0},
                                    {"id":2,"kind":"comonotone","shape":1.0}],
                        "exposure": [[1, 1], [1]]})");
    }));
}

TEST_CASE("model_to_json round-trips through parse_model") {
    for (const MRFModel& m :
         {mrftest::reference_pair(), mrftest::general_3x5(),
          mrftest::marshall_olkin(), mrftest::archimedean()}) {
        const MRFModel back = parse_model(model_to_json(m));
        CHECK(back.component_count() == m.component_count());
        CHECK(back.factor_count() == m.factor_count());
        CHECK(model_hash(back) == model_hash(m));
    }
}

TEST_CASE("model_hash separates models and is format-stable") {
    const std::string h = model_hash(mrftest::reference_pair());
    CHECK(h.size() == 16);  // 64-bit digest in fixed-width hex
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(h != model_hash(mrftest::lopsided_pair()));
    CHECK(h != model_hash(mrftest::general_3x5()));

    // Whitespace changes in the source text must not move the digest: the
    // hash covers the canonical serialization, not the input bytes.
    const std::string spaced = R"({
        "factors":    [
          {"id": 1, "kind": "comonotone",  "shape": 3.0},
          {"id": 2, "kind": "comonotone",  "shape": 0.3},
          {"id": 3, "kind": "comonotone",  "shape": 0.6},
          {"id": 4, "kind": "independent", "shape": 0.5}
        ],
        "exposure": [[1,0,1,1],[0,1,1,1]]
    })";
    CHECK(model_hash(parse_model(spaced)) == h);
}

TEST_CASE("load_model raises IoFailure for missing files") {
    CHECK(raises(ErrorCode::IoFailure,
                 [] { load_model("/definitely/not/here.json"); }));
}

TEST_CASE("error_exit_status groups codes by family") {
    CHECK(error_exit_status(ErrorCode::DivergentSeries) == 3);
    CHECK(error_exit_status(ErrorCode::NoConvergence) == 3);
    CHECK(error_exit_status(ErrorCode::QuadratureFailure) == 3);
    CHECK(error_exit_status(ErrorCode::IoFailure) == 4);
    CHECK(error_exit_status(ErrorCode::NonPositiveShape) == 2);
    CHECK(error_exit_status(ErrorCode::DegenerateGrid) == 2);
}
