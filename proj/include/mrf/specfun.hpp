// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "mrf/errors.hpp"

namespace mrf {

/// A generalized hypergeometric series pFq(a; b; z) with real parameters,
/// evaluated by direct term summation. All numerator parameters must be
/// finite; denominator parameters must not be zero or a negative integer
/// (the series terms would divide by zero).
struct HypergeometricSpec {
    std::vector<double> numeratorParams;    ///< a_1, ..., a_p
    std::vector<double> denominatorParams;  ///< b_1, ..., b_q
    double argument = 0.0;                  ///< z
    double tolerance = 1e-13;               ///< relative term-size stop rule
    std::size_t maxTerms = 100000;
};

/// Sum pFq(a; b; z) term by term with compensated accumulation.
///
/// Convergence domain: any z when p <= q; |z| < 1 when p == q + 1, plus the
/// boundary |z| = 1 when it converges absolutely or conditionally — z = 1
/// needs sum(b) - sum(a) > 0 and z = -1 needs sum(b) - sum(a) > -1. Outside
/// that set the call fails with DivergentSeries; hitting maxTerms before the
/// terms fall under tolerance fails with NoConvergence.
///
/// A numerator parameter equal to zero (or a negative integer reached by the
/// recursion) truncates the series exactly; in particular a zero numerator
/// parameter gives exactly 1.
double hyp_pfq(const HypergeometricSpec& spec);

/// The convergence margin sum(b) - sum(a). For p == q + 1 series this is the
/// quantity that decides admissibility of the unit-circle boundary: z = 1
/// requires a strictly positive margin. Example: for 3F2 with a = (1, 1, 1)
/// and b = (3, 3) the margin is 6 - 3 = 3, so z = 1 is admissible.
double convergence_margin(const HypergeometricSpec& spec);

}  // namespace mrf
