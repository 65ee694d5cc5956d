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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bertrand_kit/bertrand.hpp"

namespace bk {

enum class Side { Base, Mate };
enum class Axis { Tangent, Normal, Binormal };

struct IndicatrixKind {
    Side side = Side::Base;
    Axis axis = Axis::Tangent;
    bool operator==(const IndicatrixKind&) const = default;
};

/// "t-base", "n-mate", ...
std::string kind_name(IndicatrixKind k);
/// Accepts the names above; throws InvalidArgument otherwise.
IndicatrixKind parse_kind(const std::string& s);
std::array<IndicatrixKind, 6> all_indicatrix_kinds();

/// Sampled spherical curve t -> T, N or B of a curve on n uniform nodes,
/// taken from exact jets. Singular nodes are left out and reported.
struct IndicatrixCurve {
    Curve curve;
    std::vector<MaskedInterval> masked;
    double max_norm_deviation = 0.0;  // max | |X| - 1 |, no renormalization
};
IndicatrixCurve indicatrix_curve(const Curve& c, Axis axis, int n);

/// Indicatrix of one side of a pair; the mate side uses the mate's
/// natural orientation.
IndicatrixCurve indicatrix_curve(const BertrandPairModel& pair, IndicatrixKind kind, int n);

/// Closed-form apparatus of one indicatrix at one parameter, expressed in
/// the partner curve's apparatus (the mate for base-side kinds, the base
/// for mate-side kinds).
struct IndicatrixSample {
    double t = 0.0;
    IndicatrixKind kind;
    Vec3 X{};                 // the point on the sphere
    Vec3 T{}, N{}, B{};
    double kappa = 0.0;       // signed for the binormal axis
    double tau = 0.0;
    double ds_dsp = 0.0;      // d s_x / d s_partner, signed
    double ds_dt = 0.0;       // d s_x / dt, signed
    double Gamma = 0.0;       // NaN on the normal axis
    double rho = 0.0;         // normal axis only, NaN otherwise
    // Expressions as printed, kept for comparison (NaN where not printed).
    double kappa_printed = 0.0;
    double tau_printed = 0.0;
    double Gamma_printed = 0.0;

    /// Orientation of the indicatrix arc length relative to increasing t.
    int orientation() const { return ds_dt < 0.0 ? -1 : 1; }
};

IndicatrixSample indicatrix_sample(const PairSample& s, int eps, IndicatrixKind kind);
IndicatrixSample indicatrix_sample(const BertrandPairModel& pair, IndicatrixKind kind, double t);

inline IndicatrixSample tangent_indicatrix_apparatus(const BertrandPairModel& p, Side side, double t)
{
    return indicatrix_sample(p, {side, Axis::Tangent}, t);
}
inline IndicatrixSample normal_indicatrix_apparatus(const BertrandPairModel& p, Side side, double t)
{
    return indicatrix_sample(p, {side, Axis::Normal}, t);
}
inline IndicatrixSample binormal_indicatrix_apparatus(const BertrandPairModel& p, Side side, double t)
{
    return indicatrix_sample(p, {side, Axis::Binormal}, t);
}

/// The indicatrix apparatus recomputed from exact jets of the frame
/// vector (no partner formulas). Orientation follows increasing t.
FrenetData indicatrix_jet_apparatus(const BertrandPairModel& pair, IndicatrixKind kind, double t);

/// Closed forms over a grid, with the natural arc length of the
/// indicatrix accumulated from the closed-form rate.
struct IndicatrixApparatus {
    IndicatrixKind kind;
    std::vector<double> t;
    std::vector<std::optional<IndicatrixSample>> samples;
    std::vector<double> s;                 // cumulative |ds_x|, from t.front()
    std::optional<ArcLengthTable> s_table; // absent when masked or stalled
    std::vector<MaskedInterval> masked;
};
IndicatrixApparatus indicatrix_apparatus(const BertrandPairModel& pair, IndicatrixKind kind, int n);

/// Closed forms against the stencil apparatus of the sampled indicatrix
/// and against the exact jet apparatus.
struct DirectComparison {
    IndicatrixKind kind;
    int n = 0;
    std::vector<double> t;
    std::vector<double> kappa_closed, tau_closed, Gamma_closed;
    std::vector<double> kappa_direct, tau_direct, Gamma_direct;
    std::vector<double> gap_kappa, gap_tau;  // NaN where masked
    std::vector<double> norm_deviation;
    double max_gap_kappa = 0.0;
    double max_gap_tau = 0.0;
    double max_gap_kappa_jet = 0.0;
    double max_gap_tau_jet = 0.0;
    double max_gap_Gamma_jet = 0.0;
    double max_gap_printed_kappa = 0.0;  // printed forms vs direct
    double max_gap_printed_tau = 0.0;
    double max_norm_deviation = 0.0;
    std::vector<MaskedInterval> masked;
};

/// Relative gap |a - b| / max(|b|, floor). The torsion of an indicatrix
/// crosses zero, so its gap uses the curvature as the floor.
DirectComparison compare_with_direct(const BertrandPairModel& pair, IndicatrixKind kind, int n);

/// Vector relations between the indicatrix frames of each side.
struct FrameRelation {
    std::string id;
    double max_deviation = 0.0;      // closed-form frames
    double max_deviation_jet = 0.0;  // frames from exact jets
};
struct FrameRelationsReport {
    int epsilon = 1;
    std::vector<FrameRelation> relations;
    double masked_fraction = 0.0;
    std::vector<MaskedInterval> masked;
};
FrameRelationsReport frame_relations_check(const BertrandPairModel& pair, int n);

struct AffineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};
AffineFit affine_fit(const std::vector<double>& x, const std::vector<double>& y);

/// One candidate integrand for the tangent indicatrix arc length.
struct ArcCandidate {
    std::string name;
    double total = 0.0;
    double gap = 0.0;  // relative to the direct arc length of the sampled indicatrix
};

struct ArclengthRelations {
    int n = 0;
    int epsilon = 1;
    double lambda = 0.0;
    std::vector<double> t;
    std::vector<double> s_base;   // natural arc lengths of the pair curves
    std::vector<double> s_mate;
    // Indicatrix arc lengths integrated against the partner with the
    // closed-form signed rates (published sign conventions).
    std::vector<double> s_t, s_n, s_b;
    std::vector<double> s_t_mate, s_n_mate, s_b_mate;

    AffineFit fit_b;       // s_b against s*
    AffineFit fit_b_mate;  // s*_b against s
    double c1 = 0.0;
    ConstancyStat c1_stat;
    double predicted_slope_b = 0.0;       // -eps c1 / lambda
    double predicted_slope_b_mate = 0.0;  // c1 / lambda
    double range_b = 0.0;
    double range_b_mate = 0.0;

    std::vector<ArcCandidate> s_t_candidates;
    std::string s_t_selected;

    double s_b_direct = 0.0;       // arc length of the sampled binormal indicatrix
    double s_b_mate_direct = 0.0;  // same for the mate
    double total_torsion = 0.0;  // int tau ds over the base
    double s_n_direct = 0.0;
    double s_n_mate_integral = 0.0;  // int kappa~ sqrt(1+f~^2) ds*
    std::vector<MaskedInterval> masked;
};

ArclengthRelations indicatrix_arclength_relations(const BertrandPairModel& pair, int n);

} // namespace bk
