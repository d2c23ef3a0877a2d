// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/sampler.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "mrf/rng.hpp"

namespace mrf {

namespace {

// Stream-id layout per draw. Every random variate owns one keyed substream,
// so nothing depends on the order in which variates are generated.
//   [0, F)             gamma intensity of factor j
//   [F, F + l)         shared arrival clock of comonotone factor j
//   [F + l, ...)       op-specific clocks (per pair, or per component)
double clamp_open_unit(double u) {
    if (u < DBL_MIN) return DBL_MIN;
    const double top = std::nextafter(1.0, 0.0);
    return u > top ? top : u;
}

template <typename RowFn>
void run_rows(std::size_t count, unsigned threads, RowFn fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), count));
    if (workers <= 1) {
        for (std::size_t d = 0; d < count; ++d) fn(d);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = count * w / workers;
        const std::size_t hi = count * (w + 1) / workers;
        pool.emplace_back([=] {
            for (std::size_t d = lo; d < hi; ++d) fn(d);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace

SampleBatch sample_copula(const MRFModel& model, std::size_t count,
                          std::uint64_t seed, unsigned threads) {
    if (count == 0) {
        raise(ErrorCode::ZeroCount, "sample count must be positive");
    }
    const std::size_t n = model.component_count();
    const std::size_t F = model.factor_count();
    const std::size_t l = model.comonotone_count();
    const std::size_t m = F - l;

    SampleBatch batch;
    batch.count = count;
    batch.components = n;
    batch.kind = BatchKind::Uniforms;
    batch.seed = seed;
    batch.modelHash = model_hash(model);
    batch.values.resize(count * n);

    run_rows(count, threads, [&](std::size_t d) {
        std::vector<double> lambda(F);
        for (std::size_t j = 0; j < F; ++j) {
            lambda[j] = SubstreamRng(seed, d, j).gamma(model.factors()[j].shape);
        }
        std::vector<double> sharedClock(l);
        for (std::size_t j = 0; j < l; ++j) {
            sharedClock[j] = SubstreamRng(seed, d, F + j).exponential() / lambda[j];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double t = std::numeric_limits<double>::infinity();
            for (std::size_t j : model.rf_comonotone(i)) {
                t = std::min(t, sharedClock[j]);
            }
            for (std::size_t j : model.rf_independent(i)) {
                const std::uint64_t id = F + l + i * m + (j - l);
                const double clock =
                    SubstreamRng(seed, d, id).exponential() / lambda[j];
                t = std::min(t, clock);
            }
            const double u = std::exp(-model.agg_shape(i) * std::log1p(t));
            batch.values[d * n + i] = clamp_open_unit(u);
        }
    });
    return batch;
}

SampleBatch sample_default_times(const MRFModel& model, std::size_t count,
                                 std::uint64_t seed, unsigned threads) {
    if (count == 0) {
        raise(ErrorCode::ZeroCount, "sample count must be positive");
    }
    const std::size_t n = model.component_count();
    const std::size_t F = model.factor_count();
    const std::size_t l = model.comonotone_count();

    SampleBatch batch;
    batch.count = count;
    batch.components = n;
    batch.kind = BatchKind::DefaultTimes;
    batch.seed = seed;
    batch.modelHash = model_hash(model);
    batch.values.resize(count * n);

    run_rows(count, threads, [&](std::size_t d) {
        std::vector<double> lambda(F);
        for (std::size_t j = 0; j < F; ++j) {
            lambda[j] = SubstreamRng(seed, d, j).gamma(model.factors()[j].shape);
        }
        std::vector<double> sharedArrival(l);
        for (std::size_t j = 0; j < l; ++j) {
            sharedArrival[j] = SubstreamRng(seed, d, F + j).exponential() / lambda[j];
        }
        for (std::size_t i = 0; i < n; ++i) {
            // Components killed by the same comonotone arrival share the
            // exact double, so simultaneous defaults are bitwise ties.
            double tau = std::numeric_limits<double>::infinity();
            for (std::size_t j : model.rf_comonotone(i)) {
                tau = std::min(tau, sharedArrival[j]);
            }
            if (!model.rf_independent(i).empty()) {
                double rateSum = 0.0;
                for (std::size_t j : model.rf_independent(i)) rateSum += lambda[j];
                const double barrier = SubstreamRng(seed, d, F + l + i).exponential();
                tau = std::min(tau, barrier / rateSum);
            }
            batch.values[d * n + i] = tau;
        }
    });
    return batch;
}

double empirical_copula(const SampleBatch& batch, const CopulaPoint& point) {
    if (batch.count == 0) {
        raise(ErrorCode::EmptyBatch, "empirical copula needs at least one draw");
    }
    if (point.u.size() != batch.components) {
        raise(ErrorCode::DimensionMismatch,
              "point dimension does not match batch width");
    }
    std::size_t hits = 0;
    for (std::size_t d = 0; d < batch.count; ++d) {
        bool below = true;
        for (std::size_t i = 0; i < batch.components; ++i) {
            if (batch.at(d, i) > point.u[i]) {
                below = false;
                break;
            }
        }
        hits += below ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(batch.count);
}

void write_batch_csv(const SampleBatch& batch, std::ostream& out) {
    for (std::size_t i = 0; i < batch.components; ++i) {
        if (i > 0) out << ',';
        out << "comp_" << (i + 1);
    }
    out << '\n';
    char buf[32];
    for (std::size_t d = 0; d < batch.count; ++d) {
        for (std::size_t i = 0; i < batch.components; ++i) {
            if (i > 0) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", batch.at(d, i));
            out << buf;
        }
        out << '\n';
    }
}

std::string batch_sidecar_json(const SampleBatch& batch) {
    nlohmann::json doc;
    doc["seed"] = batch.seed;
    doc["count"] = batch.count;
    doc["components"] = batch.components;
    doc["modelHash"] = batch.modelHash;
    doc["kind"] =
        batch.kind == BatchKind::Uniforms ? "uniforms" : "default_times";
    return doc.dump();
}

}  // namespace mrf
