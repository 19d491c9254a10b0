/**************************************************************************
 * error.cpp
 *
 * Copyright 2026 The mincode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "mincode/error.hpp"

namespace mincode {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::OriginPresent: return "OriginPresent";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotBinary: return "NotBinary";
    case ErrorCode::BadAnchor: return "BadAnchor";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

} // namespace mincode
