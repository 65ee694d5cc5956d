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

#include "bertrand_kit/error.hpp"

namespace bk {

const char* error_kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::UnknownFunction: return "UnknownFunction";
    case ErrorKind::NonConstantExponent: return "NonConstantExponent";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::OrderOverflow: return "OrderOverflow";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::Singular: return "SingularPoint";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::DegenerateRatio: return "DegenerateRatio";
    case ErrorKind::NotAPair: return "NotAPair";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::DegenerateSphereCurve: return "DegenerateSphereCurve";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Format: return "FormatError";
    }
    return "Error";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

} // namespace bk
