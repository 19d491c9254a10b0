/**************************************************************************
 * error.hpp
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincode {

// Numeric values are part of the C API (see mincode.h) and must not change.
enum class ErrorCode : int {
    NotPrimePower = 1,
    CapExceeded = 2,
    DivisionByZero = 3,
    InvalidElement = 4,
    DimensionMismatch = 5,
    EmptySet = 6,
    OriginPresent = 7,
    DimensionTooSmall = 8,
    NotBinary = 9,
    BadAnchor = 10,
    ParameterOutOfRange = 11,
    ZeroCode = 12,
    HypothesisViolated = 13,
    OddDimension = 14,
    Infeasible = 15,
    CapTooSmall = 16,
    DuplicatePoint = 17,
    ParseError = 18,
    IoError = 19,
    UsageError = 20,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace mincode
