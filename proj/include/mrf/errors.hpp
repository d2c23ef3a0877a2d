// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace mrf {

/// Error taxonomy for the whole library. Codes are grouped by the kind of
/// failure so front ends can map them onto process exit statuses:
/// validation errors (bad inputs / bad model files), numerical errors
/// (a series or quadrature failed to converge), and I/O errors.
enum class ErrorCode {
    // --- validation -------------------------------------------------------
    EmptyRow,              // a component is exposed to no factor at all
    DimensionMismatch,     // matrix/vector sizes disagree
    NonPositiveShape,      // gamma shape parameters must be > 0
    IndexOutOfRange,       // component or factor index outside the model
    DuplicateIndex,        // subset contains a repeated component
    EqualIndices,          // a pair query needs two distinct components
    CoordinateOutOfRange,  // copula arguments must lie in [0,1]
    NegativeTime,          // survival times must be >= 0
    DomainError,           // scalar argument outside its documented domain
    SubsetTooSmall,        // simultaneous default needs >= 2 components
    ZeroCount,             // a sampler was asked for zero draws
    EmptyBatch,            // empirical statistics need at least one draw
    PreconditionViolated,  // operation-specific precondition failed
    InvalidTolerance,      // tolerance arguments must be positive (and sane)
    DegenerateGrid,        // slope estimation grid too small or out of range
    BadModelFile,          // model JSON malformed or semantically invalid

    // --- numerical --------------------------------------------------------
    DivergentSeries,       // hypergeometric argument outside convergence set
    NoConvergence,         // iteration cap hit before reaching tolerance
    QuadratureFailure,     // adaptive integration exhausted its budget

    // --- i/o ---------------------------------------------------------------
    IoFailure,             // file could not be read or written
};

/// Stable identifier string for an error code (used in machine-readable
/// error output).
std::string_view error_code_name(ErrorCode code) noexcept;

/// Process exit status class for an error code: 2 validation, 3 numerical,
/// 4 I/O.
int error_exit_status(ErrorCode code) noexcept;

/// Exception carrying a typed error code plus an optional context string
/// (e.g. the offending file name or parameter value rendered as text).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    ErrorCode code_;
    std::string context_;
};

/// Convenience: throw an Error.
[[noreturn]] inline void raise(ErrorCode code, const std::string& message,
                               std::string context = {}) {
    throw Error(code, message, std::move(context));
}

}  // namespace mrf
