// SPDX-FileCopyrightText: © 2026 The mrfcop Authors
//
// SPDX-License-Identifier: Apache-2.0

#include "mrf/errors.hpp"

namespace mrf {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyRow: return "EmptyRow";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonPositiveShape: return "NonPositiveShape";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DuplicateIndex: return "DuplicateIndex";
        case ErrorCode::EqualIndices: return "EqualIndices";
        case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case ErrorCode::NegativeTime: return "NegativeTime";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
        case ErrorCode::ZeroCount: return "ZeroCount";
        case ErrorCode::EmptyBatch: return "EmptyBatch";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::DegenerateGrid: return "DegenerateGrid";
        case ErrorCode::BadModelFile: return "BadModelFile";
        case ErrorCode::DivergentSeries: return "DivergentSeries";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

int error_exit_status(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivergentSeries:
        case ErrorCode::NoConvergence:
        case ErrorCode::QuadratureFailure:
            return 3;
        case ErrorCode::IoFailure:
            return 4;
        default:
            return 2;
    }
}

}  // namespace mrf
