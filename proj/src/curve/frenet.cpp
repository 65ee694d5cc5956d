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

#include "bertrand_kit/frenet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

[[noreturn]] void singular(double t, const std::string& what)
{
    Error err(ErrorKind::Singular, what + " at t=" + std::to_string(t));
    err.where = t;
    throw err;
}

} // namespace

FrenetData frenet_from_jets(const JetVec3& pos, double t)
{
    return frenet_from_velocity(pos.differentiate(), t);
}

FrenetData frenet_from_velocity(const JetVec3& v, double t)
{
    if (v.order() < 2) fail(ErrorKind::InvalidArgument, "Frenet apparatus needs position jets of order >= 3");
    const JetVec3 a = v.differentiate();
    const JetVec3 j = a.differentiate();

    const double speed0 = norm(v.value());
    if (!(speed0 > kRegularityFloor)) singular(t, "speed below regularity floor");
    const JetVec3 c = cross(v.truncated(a.order()), a);
    const double c0 = norm(c.value());
    if (!(c0 > kRegularityFloor)) singular(t, "curvature below regularity floor");

    const Jet speed = norm(v);
    const Jet cn = norm(c);
    const Jet kappa = cn / (speed * speed * speed);
    const Jet tau = dot(c, j) / dot(c, c);

    FrenetData fd;
    fd.t = t;
    fd.speed = speed.value();
    fd.T = (1.0 / fd.speed) * v.value();
    fd.B = (1.0 / c0) * c.value();
    fd.N = cross(fd.B, fd.T);
    fd.kappa = kappa.value();
    fd.tau = tau.value();
    const double vs = fd.speed;
    fd.dkappa_ds = kappa.derivative(1) / vs;
    fd.dtau_ds = tau.order() >= 1 ? tau.derivative(1) / vs : std::numeric_limits<double>::quiet_NaN();
    fd.d2kappa_ds2 = kappa.order() >= 2
                         ? (kappa.derivative(2) * vs - kappa.derivative(1) * speed.derivative(1)) / (vs * vs * vs)
                         : std::numeric_limits<double>::quiet_NaN();
    return fd;
}

FrenetData frenet_apparatus(const Curve& c, double t)
{
    return frenet_from_velocity(c.derivative_jets(t, 3), t);
}

FrameJets frame_jets(const JetVec3& pos)
{
    return frame_jets_from_velocity(pos.differentiate());
}

FrameJets frame_jets_from_velocity(const JetVec3& v)
{
    const JetVec3 a = v.differentiate();
    const int order = a.order();
    const JetVec3 vt = v.truncated(order);
    const JetVec3 c = cross(vt, a);
    if (!(norm(vt.value()) > kRegularityFloor) || !(norm(c.value()) > kRegularityFloor))
        fail(ErrorKind::Singular, "frame undefined below regularity floor");
    FrameJets f;
    f.T = (1.0 / norm(vt)) * vt;
    f.B = (1.0 / norm(c)) * c;
    f.N = cross(f.B, f.T);
    return f;
}

double slant_geodesic_indicator(const FrenetData& fd)
{
    if (!(fd.kappa > kRegularityFloor)) singular(fd.t, "curvature below regularity floor");
    const double k2t2 = fd.kappa * fd.kappa + fd.tau * fd.tau;
    return (fd.dtau_ds * fd.kappa - fd.tau * fd.dkappa_ds) / (k2t2 * std::sqrt(k2t2));
}

FrenetData reversed(const FrenetData& fd)
{
    FrenetData r = fd;
    r.T = -fd.T;
    r.B = -fd.B;
    r.dkappa_ds = -fd.dkappa_ds;
    r.dtau_ds = -fd.dtau_ds;
    return r;
}

} // namespace bk
