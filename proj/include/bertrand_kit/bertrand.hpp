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

#include <string>
#include <vector>

#include "bertrand_kit/curve.hpp"
#include "bertrand_kit/frenet.hpp"
#include "bertrand_kit/parallel.hpp"

namespace bk {

/// Below this |dkappa/ds| the ratio g is reported as undefined.
inline constexpr double kRatioFloor = 1e-10;

struct RatioInvariants {
    double t = 0.0;
    double f = 0.0;       // tau / kappa
    double g = 0.0;       // tau' / kappa' (arc-length primes)
    bool g_defined = false;
    double Gamma = 0.0;
};

RatioInvariants ratio_invariants(const FrenetData& fd);

/// Throws DegenerateRatio when g is undefined (helical case), f = g = 0
/// (planar case) or g = f.
void require_ratios(const RatioInvariants& ri);

/// Offset g / (kappa (g - f)) computed on the curve whose normal is offset.
double bertrand_lambda(const RatioInvariants& ri, double kappa);

/// The same offset read from the mate side: -eps g~ / (kappa~ (g~ - f~)).
double bertrand_lambda_from_mate(const RatioInvariants& ri_tilde, double kappa_tilde, int eps);

/// Frame and curvatures of the partner curve from one side of a pair.
struct MateApparatus {
    Vec3 T{}, N{}, B{};
    double kappa = 0.0;
    double tau = 0.0;
    double ds_ratio = 0.0;  // d(partner arc length) / d(own arc length)
};

/// Closed-form partner apparatus. Applied to the base it yields the mate;
/// applied to the mate (in its natural orientation) it yields the base.
MateApparatus mate_apparatus_from_base(const FrenetData& fd, const RatioInvariants& ri, int eps);

/// Sign of ds*/ds = f sqrt(1+g^2)/(g-f), i.e. the orientation of the
/// mate's natural arc length relative to increasing t.
int mate_orientation(const RatioInvariants& base_ri);

/// The natural mate tangent -(T - gB)/sqrt(1+g^2) always has a negative
/// T component, so the orientation is read off <T~, T> without g.
int natural_mate_orientation(const FrenetData& base, const FrenetData& mate_t);

/// Mate apparatus measured in t orientation, turned to the natural one.
FrenetData mate_natural(const FrenetData& mate_t, const FrenetData& base);

/// Gamma of one curve from its partner's apparatus:
/// -kappa' (g - f) / (kappa^2 (1 + f^2)^(3/2)) on the partner.
double geodesic_indicator_closed_form(const FrenetData& partner, const RatioInvariants& partner_ri);

/// Gamma of the mate in the long form carrying the ds/ds* factor.
double mate_geodesic_indicator_closed_form(const FrenetData& base, const RatioInvariants& ri);

// Derived curves. Samples are stored; derivatives come from exact jets of
// the recipe, so mates keep jet accuracy.

/// gamma + lambda N sampled on n points. lambda = 0 returns the base.
struct MateResult {
    Curve curve;
    std::vector<MaskedInterval> masked;
};
MateResult construct_mate(const Curve& base, double lambda, int n = 4096);

/// base + (dx, dy, dz)(t), used for sensitivity controls.
Curve perturb_curve(const Curve& base, const std::array<Expr, 3>& delta, int n = 4096);

struct GeneratedCurve {
    Curve curve;
    double lambda_nominal = 0.0;
    double a = 0.0;
    double omega = 0.0;
    int n = 0;
    bool helical = false;
    std::string warning;
};

/// gamma' = a (|c'| c + cot(omega) c x c') for a curve c on the unit
/// sphere; positions accumulated by adaptive quadrature on n nodes.
GeneratedCurve generate_bertrand_curve(const Curve& sphere_curve, double a, double omega, int n = 4096);

/// Rebuilds a derived curve from its recipe (used when reading files).
Curve rebuild_derived(const CurveOrigin& origin, std::vector<double> t, std::vector<Vec3> points,
                      std::string label);

struct ConstancyStat {
    double mean = 0.0;
    double max_dev = 0.0;
    int samples = 0;
    /// max_dev / max(|mean|, floor).
    double relative(double floor = 1e-300) const;
};

ConstancyStat constancy(const std::vector<double>& values);

struct PairOptions {
    double tol_align = 1e-6;
    double tol_const = 1e-6;
    double tol_offset = 1e-6;
};

struct PairDiagnostics {
    ConstancyStat lambda, p1, p2, q1, q2, g, g_tilde;
    double max_normal_gap = 0.0;   // 1 - |<N, N~>|
    double max_offset_perp = 0.0;  // |d - <d,N>N| / scale
};

struct BertrandPairModel {
    Curve base;
    Curve mate;
    double lambda = 0.0;
    int epsilon = 1;
    bool degenerate = false;
    std::vector<double> grid;
    ArcLengthTable s_base;
    ArcLengthTable s_mate;
    PairDiagnostics diag;
    std::vector<MaskedInterval> masked;
};

/// Throws Error(NotAPair) with reason offset-not-normal, lambda-varies or
/// normals-not-aligned.
BertrandPairModel detect_bertrand(const Curve& base, const Curve& mate, int n, const PairOptions& opt = {});

/// Everything both sides of a pair need at one parameter value.
struct PairSample {
    double t = 0.0;
    FrenetData base;
    FrenetData mate_t;  // mate, t orientation
    FrenetData mate;    // mate, natural orientation
    RatioInvariants ri;
    RatioInvariants ri_tilde;
    int sigma = 1;      // orientation of the natural mate arc length
};

PairSample pair_sample(const BertrandPairModel& pair, double t);

/// (k~ + eps k) g g~ - eps f g~ k - f~ g k~, raw and scaled by the sum of
/// the magnitudes of its four terms.
struct ConstraintValue {
    double raw = 0.0;
    double normalized = 0.0;
};
ConstraintValue pair_constraint_residual(const BertrandPairModel& pair, double t);
ConstraintValue pair_constraint_residual(const PairSample& s, int eps);

struct LinearRelationFit {
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;
    double condition = 0.0;  // sigma_min / sigma_max of the design matrix
};

/// Least squares a kappa + b tau = 1 over n samples.
LinearRelationFit linear_relation_fit(const Curve& c, int n);

/// Geodesic curvature det(c, c', c'')/|c'|^3 of a curve on the unit sphere.
double sphere_geodesic_curvature(const Curve& c, double t);

} // namespace bk
