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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bertrand_kit/curve.hpp"
#include "bertrand_kit/parallel.hpp"

namespace bk {

using ojson = nlohmann::ordered_json;

inline constexpr int kCurveSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Reals are written with 17 significant digits in exponent form so the
/// text is fixed width and reads back to the same double.
std::string format_real(double v);

/// Deterministic JSON text. Floats use format_real, non-finite floats
/// become null, scalar arrays of up to 32 entries stay on one line.
std::string dump_json(const ojson& j);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// CurveFile document. Derived curves carry a "generator" block with
/// their recipe and the full parent curve.
ojson curve_to_json(const Curve& c);
Curve curve_from_json(const nlohmann::json& j);

std::string write_curve(const Curve& c);
/// Throws Format on malformed documents.
Curve read_curve(std::string_view text);
Curve load_curve_file(const std::string& path);

/// Sphere curves used to seed the generator.
struct SpherePreset {
    std::string name;
    Curve curve;
    double omega = 0.0;  // suggested generator angle
};
std::vector<std::string> preset_names();
std::optional<SpherePreset> sphere_preset(const std::string& name);

ojson masked_to_json(const std::vector<MaskedInterval>& m);

/// One CSV line; reals through format_real, NaN written as "nan".
std::string csv_line(const std::vector<double>& row);
std::string csv_header(const std::vector<std::string>& names);

} // namespace bk
