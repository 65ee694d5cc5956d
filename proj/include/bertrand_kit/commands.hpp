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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bertrand_kit/error.hpp"

namespace bk {

/// Everything a command produces. The caller prints `out` on stdout,
/// `diagnostics` on stderr and writes `files`.
struct CommandResult {
    std::string out;
    std::vector<std::pair<std::string, std::string>> files;  // path, contents
    std::vector<std::string> diagnostics;
    int exit_code = 0;
};

/// 2 parse/input, 3 domain, 4 singular, 5 degenerate ratio, 6 not a pair,
/// 8 degenerate sphere curve, 1 anything else. 7 is reserved for failed
/// identities and is never produced by an exception.
int exit_code_for(ErrorKind k);

struct FrenetArgs {
    std::string curve;
    std::optional<double> at;
    int grid = 256;
    int order = 2;  // highest arc-length derivative written (0..2)
    bool mask = false;
    std::string csv;
};

struct MateArgs {
    std::string curve;
    std::optional<double> lambda;
    bool auto_lambda = false;
    int n = 4096;
    std::string out;
};

struct IndicatrixArgs {
    std::string base;
    std::string mate;
    std::string kind;
    int n = 512;
    std::string csv;
    std::string out;  // optional sampled indicatrix curve file
};

struct VerifyArgs {
    std::string base;
    std::string mate;
    int n = 512;
    std::map<std::string, double> tol;
};

struct GenerateArgs {
    std::string sphere;  // file path or preset name
    double a = 1.0;
    std::optional<double> omega;
    int n = 4096;
    std::string out;
};

struct ClassifyArgs {
    std::vector<std::string> files;  // one curve or a pair
    int n = 512;
    bool arclength_aligned = false;
};

/// Commands throw bk::Error on failure.
CommandResult cmd_frenet(const FrenetArgs& a);
CommandResult cmd_mate(const MateArgs& a);
CommandResult cmd_indicatrix(const IndicatrixArgs& a);
CommandResult cmd_verify(const VerifyArgs& a);
CommandResult cmd_generate(const GenerateArgs& a);
CommandResult cmd_classify(const ClassifyArgs& a);

/// Parses "id=value".
std::pair<std::string, double> parse_tolerance_override(const std::string& s);

} // namespace bk
