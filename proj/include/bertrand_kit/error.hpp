// Copyright 2026 The bertrand-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bk {

enum class ErrorKind {
    Syntax,
    UnknownFunction,
    NonConstantExponent,
    Domain,
    OrderOverflow,
    OutOfDomain,
    Singular,
    NonConvergent,
    DegenerateRatio,
    NotAPair,
    IllConditioned,
    NotSpherical,
    DegenerateSphereCurve,
    TooFewSamples,
    GridMismatch,
    InvalidArgument,
    Io,
    Format,
};

const char* error_kind_name(ErrorKind k);

/// Every failure raised by the library. Extra fields are filled only for
/// the kinds that use them (position/expected for Syntax, name for
/// UnknownFunction, reason for NotAPair).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    std::size_t position = 0;
    std::vector<std::string> expected;
    std::string name;
    std::string reason;
    double where = 0.0;

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace bk
