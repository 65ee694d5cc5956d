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
#include <string>
#include <vector>

#include "bertrand_kit/indicatrix.hpp"

namespace bk {

/// Relative thresholds. Deviations of dimensionless ratios are taken
/// relative to max(|mean|, 1).
struct ClassifyTolerances {
    double planar = 1e-8;
    double helix = 1e-6;
    double slant = 1e-5;
    double sphere = 1e-8;
};

struct CurveMetrics {
    double tau_max = 0.0;
    double kappa_max = 0.0;
    double f_deviation = 0.0;
    double Gamma_deviation = 0.0;
    double sphere_fit_residual = 0.0;  // max | |p - c| - r | / r
    Vec3 sphere_center{};
    double sphere_radius = 0.0;
};

struct CurveClass {
    bool planar = false;
    bool general_helix = false;
    bool slant_helix = false;
    bool spherical = false;
    bool sphere_fit_degenerate = false;  // coplanar samples, centre not unique
    CurveMetrics metrics;
    double masked_fraction = 0.0;
    std::vector<MaskedInterval> masked;
};

CurveClass classify_curve(const Curve& c, int n, const ClassifyTolerances& tol = {});

/// max |x - mean| / max(|mean|, 1), skipping non-finite values.
double ratio_deviation(const std::vector<double>& x);

struct SphericalHelixCheck {
    bool is_spherical_helix = false;
    double deviation = 0.0;
    double mean_ratio = 0.0;
};

/// An indicatrix counts as a spherical helix when tau_x / kappa_x is constant.
SphericalHelixCheck spherical_helix_check(const IndicatrixApparatus& app, double tol_helix = 1e-6);
SphericalHelixCheck spherical_helix_check(const std::vector<double>& kappa, const std::vector<double>& tau,
                                          double tol_helix = 1e-6);

/// k~'' k~ (1 + f~^2) - 3 k~'^2 (1 + f~ g~), raw and divided by the sum of
/// the magnitudes of its two terms.
struct ConditionResidual {
    double raw = 0.0;
    double normalized = 0.0;
};
/// Spherical-helix condition of the tangent and binormal indicatrices,
/// arranged as k~'' k~ f~^2 - 3 k~'^2 g~ f~ + k~'' k~ - 3 k~'^2.
ConditionResidual helix_condition_residual(const FrenetData& fd_tilde, const RatioInvariants& ri_tilde);
/// Planarity condition of the normal indicatrix, arranged as
/// k~ k~'' f~^2 - 3 k~'^2 g~ f~ - (3 k~'^2 - k~ k~''). Same polynomial.
ConditionResidual planar_condition_residual(const FrenetData& fd_tilde, const RatioInvariants& ri_tilde);

enum class PairVerdict { Bertrand, Mannheim, InvoluteEvolute, None };
std::string verdict_name(PairVerdict v);

struct CategoryEvidence {
    std::string category;
    bool pass = false;
    double offset_misalignment = 0.0;  // |d - <d,u>u| / scale for the offset direction u
    double frame_misalignment = 0.0;   // category-specific frame test
    double offset_variation = 0.0;     // relative deviation of <d,u> (0 for involutes)
    double offset_mean = 0.0;
    std::string failed;                // first failing test, empty on pass
};

struct PairClass {
    PairVerdict verdict = PairVerdict::None;
    bool arclength_aligned = false;
    std::vector<CategoryEvidence> evidence;  // Bertrand, Mannheim, involute order
    double masked_fraction = 0.0;
    std::vector<MaskedInterval> masked;
};

struct PairClassifyOptions {
    double tol_align = 1e-6;
    double tol_const = 1e-6;
    double tol_offset = 1e-6;
    /// Match points by equal fractions of arc length instead of equal t.
    bool arclength_aligned = false;
};

PairClass pair_classify(const Curve& a, const Curve& b, int n, const PairClassifyOptions& opt = {});

enum class EntryKind { Identity, Equivalence, Condition, Classification };
std::string entry_kind_name(EntryKind k);

struct TheoremEntry {
    std::string id;
    EntryKind kind = EntryKind::Identity;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double masked_fraction = 0.0;
    /// Flags compared by equivalence entries, in the order of `flag_names`.
    std::vector<std::string> flag_names;
    std::vector<bool> flags;
    /// Secondary measurements, reported but not part of pass.
    std::vector<std::pair<std::string, double>> details;
    std::string note;
};

struct TheoremReport {
    std::vector<TheoremEntry> entries;
    int epsilon = 1;
    double lambda = 0.0;
    int n = 0;
    bool identities_pass() const;
    const TheoremEntry* find(const std::string& id) const;
};

/// Default tolerance per entry id.
std::map<std::string, double> default_theorem_tolerances();
std::vector<std::string> theorem_ids();

TheoremReport theorem_suite(const BertrandPairModel& pair, int n,
                            const std::map<std::string, double>& tol_overrides = {},
                            const ClassifyTolerances& ctol = {});

} // namespace bk
