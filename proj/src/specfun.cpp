// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/specfun.hpp"

#include <cmath>
#include <cstdlib>

namespace mrf {

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

void validate_spec(const HypergeometricSpec& spec) {
    if (!(spec.tolerance > 0.0) || spec.tolerance >= 1.0) {
        raise(ErrorCode::InvalidTolerance,
              "hypergeometric tolerance must lie in (0, 1)");
    }
    if (spec.maxTerms == 0) {
        raise(ErrorCode::InvalidTolerance, "maxTerms must be positive");
    }
    for (double a : spec.numeratorParams) {
        if (!std::isfinite(a)) {
            raise(ErrorCode::DomainError, "non-finite numerator parameter");
        }
    }
    for (double b : spec.denominatorParams) {
        if (!std::isfinite(b)) {
            raise(ErrorCode::DomainError, "non-finite denominator parameter");
        }
        if (is_nonpositive_integer(b)) {
            raise(ErrorCode::DomainError,
                  "denominator parameter is zero or a negative integer");
        }
    }
    if (!std::isfinite(spec.argument)) {
        raise(ErrorCode::DomainError, "non-finite series argument");
    }
}

}  // namespace

double convergence_margin(const HypergeometricSpec& spec) {
    double margin = 0.0;
    for (double b : spec.denominatorParams) margin += b;
    for (double a : spec.numeratorParams) margin -= a;
    return margin;
}

double hyp_pfq(const HypergeometricSpec& spec) {
    validate_spec(spec);

    const std::size_t p = spec.numeratorParams.size();
    const std::size_t q = spec.denominatorParams.size();
    const double z = spec.argument;

    // A zero numerator parameter kills every term past the first.
    for (double a : spec.numeratorParams) {
        if (a == 0.0) return 1.0;
    }
    if (z == 0.0) return 1.0;

    // Series truncates exactly when some numerator parameter is a
    // non-positive integer; in that case convergence is automatic.
    bool truncates = false;
    for (double a : spec.numeratorParams) {
        if (is_nonpositive_integer(a)) {
            truncates = true;
            break;
        }
    }

    if (!truncates && p > q + 1) {
        raise(ErrorCode::DivergentSeries,
              "series has more numerator than denominator parameters plus one");
    }
    if (!truncates && p == q + 1) {
        if (std::fabs(z) > 1.0) {
            raise(ErrorCode::DivergentSeries,
                  "argument outside the unit disc for a p = q + 1 series");
        }
        if (std::fabs(z) == 1.0) {
            const double margin = convergence_margin(spec);
            if (z > 0.0 && margin <= 0.0) {
                raise(ErrorCode::DivergentSeries,
                      "z = 1 needs a positive convergence margin");
            }
            if (z < 0.0 && margin <= -1.0) {
                raise(ErrorCode::DivergentSeries,
                      "z = -1 needs convergence margin > -1");
            }
        }
    }

    // Kahan-compensated forward recursion on the terms:
    //   t_{k+1} = t_k * prod(a_i + k) / prod(b_j + k) * z / (k + 1).
    double sum = 1.0;
    double comp = 0.0;
    double term = 1.0;
    for (std::size_t k = 0; k < spec.maxTerms; ++k) {
        double ratio = z / static_cast<double>(k + 1);
        for (double a : spec.numeratorParams) ratio *= a + static_cast<double>(k);
        for (double b : spec.denominatorParams) ratio /= b + static_cast<double>(k);
        term *= ratio;
        if (term == 0.0) return sum;

        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        // Stop once two consecutive terms are negligible relative to the
        // running sum; a single small term can be a transient zero crossing
        // of an alternating series.
        if (std::fabs(term) <= spec.tolerance * std::fabs(sum)) {
            double nextRatio = z / static_cast<double>(k + 2);
            for (double a : spec.numeratorParams) {
                nextRatio *= a + static_cast<double>(k + 1);
            }
            for (double b : spec.denominatorParams) {
                nextRatio /= b + static_cast<double>(k + 1);
            }
            if (std::fabs(term * nextRatio) <= spec.tolerance * std::fabs(sum)) {
                return sum;
            }
        }
    }
    raise(ErrorCode::NoConvergence,
          "hypergeometric series did not meet tolerance within maxTerms");
}

}  // namespace mrf
