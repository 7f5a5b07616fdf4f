// Copyright 2026 The qmlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmlearn/errors.hpp"

namespace qmlearn {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidDegree: return "InvalidDegree";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::PromiseViolated: return "PromiseViolated";
        case ErrorCode::InconsistentCoefficients: return "InconsistentCoefficients";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::MemoryLimitExceeded: return "MemoryLimitExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace qmlearn
