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

#include "bertrand_kit/curve.hpp"
#include "bertrand_kit/jet.hpp"
#include "bertrand_kit/vec3.hpp"

namespace bk {

inline constexpr double kRegularityFloor = 1e-9;

/// Frenet frame, curvature, torsion and their arc-length derivatives at a
/// parameter value. Orientation follows increasing t.
struct FrenetData {
    double t = 0.0;
    double speed = 0.0;
    Vec3 T{}, N{}, B{};
    double kappa = 0.0;
    double tau = 0.0;
    double dkappa_ds = 0.0;
    double dtau_ds = 0.0;
    double d2kappa_ds2 = 0.0;
};

/// Apparatus from position jets of order >= 4 (order 3 leaves
/// d2kappa_ds2 as NaN). Throws Singular below the regularity floor.
FrenetData frenet_from_jets(const JetVec3& pos, double t);
FrenetData frenet_from_velocity(const JetVec3& vel, double t);

FrenetData frenet_apparatus(const Curve& c, double t);

/// Frame vectors as jets in t, two orders below the position
/// jet (one below the velocity jet).
struct FrameJets {
    JetVec3 T, N, B;
};
FrameJets frame_jets(const JetVec3& pos);
FrameJets frame_jets_from_velocity(const JetVec3& vel);

/// Geodesic curvature of the principal image of the normal indicatrix:
/// (tau' kappa - tau kappa') / (kappa^2 + tau^2)^(3/2).
double slant_geodesic_indicator(const FrenetData& fd);

/// Same apparatus with the orientation reversed (T, B and odd
/// derivatives change sign).
FrenetData reversed(const FrenetData& fd);

} // namespace bk
