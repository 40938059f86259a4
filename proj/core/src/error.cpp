// Copyright 2026 The symplectiq Authors
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

#include "symplectiq/error.hpp"

namespace symplectiq {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonHermitianInput: return "NonHermitianInput";
        case ErrorCode::NonSymmetricInput: return "NonSymmetricInput";
        case ErrorCode::MixedGeneratorUnsupported: return "MixedGeneratorUnsupported";
        case ErrorCode::ModesMustDiffer: return "ModesMustDiffer";
        case ErrorCode::PairingBitInCondition: return "PairingBitInCondition";
        case ErrorCode::DuplicateConditionBit: return "DuplicateConditionBit";
        case ErrorCode::ModeOutOfRange: return "ModeOutOfRange";
        case ErrorCode::BitOutOfRange: return "BitOutOfRange";
        case ErrorCode::DisplacementUnsupported: return "DisplacementUnsupported";
        case ErrorCode::LcuTimeOutOfRange: return "LcuTimeOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
        case ErrorCode::SuccessProbabilityZero: return "SuccessProbabilityZero";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::UnsupportedGate: return "UnsupportedGate";
        case ErrorCode::NotDecomposable: return "NotDecomposable";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace symplectiq
