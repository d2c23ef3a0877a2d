// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "mrf/model.hpp"

namespace mrf {

/// A point in the copula's domain [0,1]^n.
struct CopulaPoint {
    std::vector<double> u;
};

/// Named structural sub-families the copula collapses to for special
/// exposure patterns.
enum class SpecialCase {
    Product,
    FrechetUpper,
    ClaytonArchimedean,
    MarshallOlkin,
    GeneralMRF,
};

std::string_view to_string(SpecialCase value) noexcept;

/// Marginal survival probability of component i at time t >= 0:
/// (1 + t)^{-aggShape_i}. Strictly decreasing in t, equal to 1 at t = 0.
double marginal_survival(const MRFModel& model, std::size_t i, double t);

/// Generalized inverse of the marginal survival function:
/// u^{-1/aggShape_i} - 1 for u in (0, 1], and a +infinity sentinel at u = 0
/// (the inverse of an empty sublevel set). Fails with DomainError outside
/// [0, 1].
double marginal_survival_inverse(const MRFModel& model, std::size_t i, double u);

/// Exact n-dimensional copula value
///   C(u) = prod_{j comonotone} min_{i in RC_j} u_i^{xi_j / aggShape_i}
///        * prod_{j independent} [1 + sum_{i in RC_j} (u_i^{-1/aggShape_i} - 1)]^{-xi_j}.
/// Grounded (0 if any coordinate is 0) with uniform margins. Evaluated in
/// log space; stable for shapes spanning [1e-3, 1e3].
double copula_cdf(const MRFModel& model, const CopulaPoint& point);

/// Joint survival probability at componentwise times t >= 0:
///   S(t) = prod_{j comonotone} (1 + max_{i in RC_j} t_i)^{-xi_j}
///        * prod_{j independent} (1 + sum_{i in RC_j} t_i)^{-xi_j}.
/// Satisfies S(t) = C(S_1(t_1), ..., S_n(t_n)).
double joint_survival(const MRFModel& model, const std::vector<double>& t);

/// Closed-form bivariate copula for a reduced parameter set:
///   C(u, v) = u^{xiIbar/xiI} v^{xiKbar/xiK}
///           * min(u^{alpha/xiI}, v^{alpha/xiK})
///           * (u^{-1/xiI} + v^{-1/xiK} - 1)^{-gamma}
/// with alpha = alphaCommon and gamma = gammaCommon. Continuous, with a
/// singular kink along u^{alpha/xiI} = v^{alpha/xiK} when alpha > 0.
double bivariate_cdf(const BivariateClaytonParams& params, double u, double v);

/// log C(u, v) evaluated directly from log u and log v (both <= 0). Stays
/// accurate deep in the lower tail where u and v themselves would underflow.
double log_bivariate_cdf(const BivariateClaytonParams& params, double logU,
                         double logV);

/// Structural classification:
///  - Product: every factor hits at most one component;
///  - FrechetUpper: a single comonotone factor hits all components and every
///    other column is empty;
///  - ClaytonArchimedean: same but the single factor is independent-hitting;
///  - MarshallOlkin: every non-empty column is comonotone-hitting;
///  - GeneralMRF otherwise.
SpecialCase classify_special_case(const MRFModel& model);

/// The copula construction only needs, per aggregated shape s, the Laplace
/// transform psi(s, t) of the latent intensity sum and its inverse
/// psiInverse(s, u); the family must be closed under convolution in s. This
/// hook lets the generic formula
///   C(u) = prod_{j comonotone} psi(xi_j, max_{i in RC_j} psiInverse(agg_i, u_i))
///        * prod_{j independent} psi(xi_j, sum_{i in RC_j} psiInverse(agg_i, u_i))
/// be evaluated for any such family; only the gamma instantiation ships with
/// analytic dependence measures.
struct LaplaceTransformHook {
    std::function<double(double shape, double t)> psi;
    std::function<double(double shape, double u)> psiInverse;
};

/// The gamma-family hook: psi(s, t) = (1 + t)^{-s},
/// psiInverse(s, u) = u^{-1/s} - 1.
LaplaceTransformHook gamma_lt_hook();

/// Generic-hook evaluation of the copula (linear space; intended for
/// moderate arguments and cross-checks against copula_cdf).
double copula_cdf_lt(const MRFModel& model, const CopulaPoint& point,
                     const LaplaceTransformHook& hook);

}  // namespace mrf
