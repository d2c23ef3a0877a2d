// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/copula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mrf {

namespace {

void check_unit_interval(double u, const char* what) {
    if (!(u >= 0.0) || u > 1.0) {
        raise(ErrorCode::CoordinateOutOfRange,
              std::string(what) + " must lie in [0, 1]");
    }
}

/// log(sum_i exp(a_i) - defect) for a_i >= 0, defect >= 0 with
/// sum exp(a_i) > defect; shifts by the max to avoid overflow.
double log_sum_exp_minus(const std::vector<double>& a, double defect) {
    double m = 0.0;
    for (double x : a) m = std::max(m, x);
    if (std::isinf(m)) return m;
    double s = -defect * std::exp(-m);
    for (double x : a) s += std::exp(x - m);
    return m + std::log(s);
}

}  // namespace

std::string_view to_string(SpecialCase value) noexcept {
    switch (value) {
        case SpecialCase::Product: return "Product";
        case SpecialCase::FrechetUpper: return "FrechetUpper";
        case SpecialCase::ClaytonArchimedean: return "ClaytonArchimedean";
        case SpecialCase::MarshallOlkin: return "MarshallOlkin";
        case SpecialCase::GeneralMRF: return "GeneralMRF";
    }
    return "GeneralMRF";
}

double marginal_survival(const MRFModel& model, std::size_t i, double t) {
    if (i >= model.component_count()) {
        raise(ErrorCode::IndexOutOfRange, "component index outside model");
    }
    if (!(t >= 0.0)) {
        raise(ErrorCode::NegativeTime, "survival time must be non-negative");
    }
    return std::exp(-model.agg_shape(i) * std::log1p(t));
}

double marginal_survival_inverse(const MRFModel& model, std::size_t i, double u) {
    if (i >= model.component_count()) {
        raise(ErrorCode::IndexOutOfRange, "component index outside model");
    }
    if (u < 0.0 || u > 1.0) {
        raise(ErrorCode::DomainError, "survival level must lie in [0, 1]");
    }
    if (u == 0.0) return std::numeric_limits<double>::infinity();
    return std::expm1(-std::log(u) / model.agg_shape(i));
}

double copula_cdf(const MRFModel& model, const CopulaPoint& point) {
    const std::size_t n = model.component_count();
    if (point.u.size() != n) {
        raise(ErrorCode::DimensionMismatch, "point dimension does not match model");
    }
    for (double u : point.u) check_unit_interval(u, "copula coordinate");
    for (double u : point.u) {
        if (u == 0.0) return 0.0;
    }

    const std::size_t F = model.factor_count();
    const std::size_t l = model.comonotone_count();
    double logC = 0.0;
    std::vector<double> scaled;  // -log(u_i)/aggShape_i over one factor's victims
    for (std::size_t j = 0; j < F; ++j) {
        const auto& victims = model.rc(j);
        if (victims.empty()) continue;
        const double xi = model.factors()[j].shape;
        if (j < l) {
            // min_i u_i^{xi/agg_i}: the smallest value has the largest
            // -log(u_i)/agg_i.
            double worst = 0.0;
            for (std::size_t i : victims) {
                worst = std::max(worst, -std::log(point.u[i]) / model.agg_shape(i));
            }
            logC -= xi * worst;
        } else {
            scaled.clear();
            for (std::size_t i : victims) {
                scaled.push_back(-std::log(point.u[i]) / model.agg_shape(i));
            }
            // 1 + sum_i (u_i^{-1/agg_i} - 1) = sum_i exp(scaled_i) - (m - 1)
            logC -= xi * log_sum_exp_minus(scaled,
                                           static_cast<double>(victims.size()) - 1.0);
        }
    }
    return std::exp(logC);
}

double joint_survival(const MRFModel& model, const std::vector<double>& t) {
    const std::size_t n = model.component_count();
    if (t.size() != n) {
        raise(ErrorCode::DimensionMismatch, "time vector dimension does not match model");
    }
    for (double ti : t) {
        if (!(ti >= 0.0)) {
            raise(ErrorCode::NegativeTime, "survival times must be non-negative");
        }
    }

    const std::size_t F = model.factor_count();
    const std::size_t l = model.comonotone_count();
    double logS = 0.0;
    for (std::size_t j = 0; j < F; ++j) {
        const auto& victims = model.rc(j);
        if (victims.empty()) continue;
        const double xi = model.factors()[j].shape;
        double arg = 0.0;
        if (j < l) {
            for (std::size_t i : victims) arg = std::max(arg, t[i]);
        } else {
            for (std::size_t i : victims) arg += t[i];
        }
        logS -= xi * std::log1p(arg);
    }
    return std::exp(logS);
}

double log_bivariate_cdf(const BivariateClaytonParams& params, double logU,
                         double logV) {
    if (std::isinf(logU) || std::isinf(logV)) {
        return -std::numeric_limits<double>::infinity();
    }
    const double a = -logU / params.xiI;  // -log of u^{1/xiI}, >= 0
    const double b = -logV / params.xiK;

    double logC = -params.xiIbar * a - params.xiKbar * b;
    if (params.alphaCommon > 0.0) {
        logC -= params.alphaCommon * std::max(a, b);
    }
    if (params.gammaCommon > 0.0) {
        // log(e^a + e^b - 1), shifted by max(a, b).
        const double m = std::max(a, b);
        const double s = std::exp(a - m) + std::exp(b - m) - std::exp(-m);
        logC -= params.gammaCommon * (m + std::log(s));
    }
    return logC;
}

double bivariate_cdf(const BivariateClaytonParams& params, double u, double v) {
    check_unit_interval(u, "copula coordinate");
    check_unit_interval(v, "copula coordinate");
    if (u == 0.0 || v == 0.0) return 0.0;
    return std::exp(log_bivariate_cdf(params, std::log(u), std::log(v)));
}

SpecialCase classify_special_case(const MRFModel& model) {
    const std::size_t n = model.component_count();
    const std::size_t F = model.factor_count();

    bool everySingleton = true;
    std::size_t nonEmpty = 0;
    std::size_t fullColumns = 0;
    std::size_t fullColumn = F;  // index of a column hitting all components
    bool allNonEmptyComonotone = true;
    for (std::size_t j = 0; j < F; ++j) {
        const std::size_t card = model.rc(j).size();
        if (card > 1) everySingleton = false;
        if (card == 0) continue;
        ++nonEmpty;
        if (card == n) {
            ++fullColumns;
            fullColumn = j;
        }
        if (j >= model.comonotone_count()) allNonEmptyComonotone = false;
    }

    if (everySingleton) return SpecialCase::Product;
    if (nonEmpty == 1 && fullColumns == 1) {
        return fullColumn < model.comonotone_count() ? SpecialCase::FrechetUpper
                                                     : SpecialCase::ClaytonArchimedean;
    }
    if (allNonEmptyComonotone) return SpecialCase::MarshallOlkin;
    return SpecialCase::GeneralMRF;
}

LaplaceTransformHook gamma_lt_hook() {
    LaplaceTransformHook hook;
    hook.psi = [](double shape, double t) {
        return std::exp(-shape * std::log1p(t));
    };
    hook.psiInverse = [](double shape, double u) {
        return std::expm1(-std::log(u) / shape);
    };
    return hook;
}

double copula_cdf_lt(const MRFModel& model, const CopulaPoint& point,
                     const LaplaceTransformHook& hook) {
    const std::size_t n = model.component_count();
    if (point.u.size() != n) {
        raise(ErrorCode::DimensionMismatch, "point dimension does not match model");
    }
    for (double u : point.u) check_unit_interval(u, "copula coordinate");
    for (double u : point.u) {
        if (u == 0.0) return 0.0;
    }

    std::vector<double> tau(n);
    for (std::size_t i = 0; i < n; ++i) {
        tau[i] = hook.psiInverse(model.agg_shape(i), point.u[i]);
    }

    const std::size_t l = model.comonotone_count();
    double c = 1.0;
    for (std::size_t j = 0; j < model.factor_count(); ++j) {
        const auto& victims = model.rc(j);
        if (victims.empty()) continue;
        double arg = 0.0;
        if (j < l) {
            for (std::size_t i : victims) arg = std::max(arg, tau[i]);
        } else {
            for (std::size_t i : victims) arg += tau[i];
        }
        c *= hook.psi(model.factors()[j].shape, arg);
    }
    return c;
}

}  // namespace mrf
