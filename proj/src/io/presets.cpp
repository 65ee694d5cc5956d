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

#include <numbers>

#include "bertrand_kit/io.hpp"

namespace bk {

namespace {

struct PresetSpec {
    const char* name;
    std::string x, y, z;
    Domain domain;
    double omega;
};

// (cos t, sin t, h(t)) pushed onto the unit sphere.
PresetSpec radial(const char* name, const std::string& h, Domain d, double omega)
{
    const std::string r = "sqrt(1+(" + h + ")^2)";
    return {name, "cos(t)/" + r, "sin(t)/" + r, "(" + h + ")/" + r, d, omega};
}

// Spherical curve whose generated Bertrand curve is also a slant helix.
PresetSpec slant_spec()
{
    const std::string k = "cos(0.7)";
    const std::string z = "(sin(0.7)*sin(t))";
    const std::string r = "sqrt(1-" + z + "^2)";
    const std::string D = "sqrt(cos(t)^2+" + k + "^2*sin(t)^2)";
    const std::string A = "(t/" + k + ")";
    return {"slant",
            r + "*(cos(" + A + ")*cos(t)+sin(" + A + ")*" + k + "*sin(t))/" + D,
            r + "*(sin(" + A + ")*cos(t)-cos(" + A + ")*" + k + "*sin(t))/" + D,
            z,
            {-1.2, -0.7},
            std::numbers::pi / 3};
}

std::vector<PresetSpec> specs()
{
    constexpr double third = std::numbers::pi / 3;
    return {
        radial("wobble", "0.3*sin(2*t)", {0.55, 0.72}, third),
        radial("cap", "-1.2+0.15*cos(2*t)", {0.15, 1.45}, third),
        radial("lobe", "-0.9+0.25*sin(3*t)", {0.08, 0.45}, third),
        {"spiral", "cos(t)*sin(0.35+0.016*t)", "sin(t)*sin(0.35+0.016*t)", "cos(0.35+0.016*t)", {0.0, 38.0},
         2 * third},
        slant_spec(),
        {"great-circle", "cos(t)", "sin(t)", "0", {0.0, 1.5}, third},
        {"small-circle", "0.6*cos(t)", "0.6*sin(t)", "0.8", {0.0, 1.5}, third},
    };
}

} // namespace

std::vector<std::string> preset_names()
{
    std::vector<std::string> out;
    for (const auto& s : specs()) out.emplace_back(s.name);
    return out;
}

std::optional<SpherePreset> sphere_preset(const std::string& name)
{
    for (const auto& s : specs())
        if (name == s.name) return SpherePreset{name, Curve::analytic(s.x, s.y, s.z, s.domain, name), s.omega};
    return std::nullopt;
}

} // namespace bk
