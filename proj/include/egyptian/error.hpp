// Copyright 2026 The dense-egyptian Authors
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

namespace egyptian {

enum class ErrorCode {
    Domain,
    Parameter,
    Divisibility,
    Mass,
    Input,
    Resource,
    InfeasibleMass,
    UnsupportedDenominator,
    EliminationFailed,
    BreuschPreconditionFailed,
    BoundExceeded,
    RemainderNonPositive,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this type. The
/// pipeline errors carry the parameter a user should change and a hint.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::string failing_parameter = {}, std::string suggestion = {})
        : std::runtime_error(message),
          code_(code),
          failing_parameter_(std::move(failing_parameter)),
          suggestion_(std::move(suggestion)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& failing_parameter() const noexcept { return failing_parameter_; }
    const std::string& suggestion() const noexcept { return suggestion_; }

private:
    ErrorCode code_;
    std::string failing_parameter_;
    std::string suggestion_;
};

}  // namespace egyptian
