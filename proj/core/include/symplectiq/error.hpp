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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symplectiq {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NonHermitianInput,
    NonSymmetricInput,
    MixedGeneratorUnsupported,
    ModesMustDiffer,
    PairingBitInCondition,
    DuplicateConditionBit,
    ModeOutOfRange,
    BitOutOfRange,
    DisplacementUnsupported,
    LcuTimeOutOfRange,
    ParseError,
    ZeroVector,
    QubitOutOfRange,
    SuccessProbabilityZero,
    CapacityExceeded,
    UnsupportedGate,
    NotDecomposable,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

/// Exception type thrown by every module of the library. The code is part of
/// the public contract: the CLI maps it onto process exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    const std::string &detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace symplectiq
