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

#include <cmath>

#include <gtest/gtest.h>

#include "bertrand_kit/indicatrix.hpp"
#include "support.hpp"

using namespace bk;

namespace {

const char* const kPresets[] = {"wobble", "cap", "lobe"};

Domain pair_domain(const BertrandPairModel& p) { return {p.grid.front(), p.grid.back()}; }

} // namespace

TEST(Kinds, NamesRoundTrip)
{
    for (const auto& k : all_indicatrix_kinds()) EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_EQ(kind_name({Side::Mate, Axis::Binormal}), "b-mate");
    EXPECT_THROW(parse_kind("x-base"), Error);
}

TEST(Indicatrix, HelixTangentIsASmallCircle)
{
    const IndicatrixCurve ic = indicatrix_curve(bkt::helix(), Axis::Tangent, 128);
    for (double t : uniform_grid({0.1, 5.9}, 50)) {
        const Vec3 p = ic.curve.point(t);
        EXPECT_NEAR(p[2], 0.8, 1e-12);
        EXPECT_NEAR(std::hypot(p[0], p[1]), 0.6, 1e-12);
    }
    // Sampled on 128 nodes, the stencil curvature is 1/0.6 to good accuracy.
    EXPECT_NEAR(frenet_apparatus(ic.curve, 2.0).kappa, 1.0 / 0.6, 1e-6);
}

TEST(Indicatrix, PlanarBinormalIsAPoint)
{
    const IndicatrixCurve ic = indicatrix_curve(bkt::circle(2.0), Axis::Binormal, 64);
    for (double t : ic.curve.params()) EXPECT_LT(distance(ic.curve.point(t), {0, 0, 1}), 1e-15);
}

TEST(Indicatrix, PointsStayOnTheSphere)
{
    for (const char* name : kPresets) {
        const auto& gp = bkt::generated_pair(name);
        for (const auto& k : all_indicatrix_kinds()) {
            EXPECT_LT(indicatrix_curve(gp.pair, k, 256).max_norm_deviation, 1e-10) << name << " " << kind_name(k);
            for (double t : uniform_grid(pair_domain(gp.pair), 20))
                EXPECT_LT(std::fabs(norm(indicatrix_sample(gp.pair, k, t).X) - 1.0), 1e-10);
        }
    }
}

TEST(Indicatrix, ClosedFormsMatchDirectApparatus)
{
    for (const char* name : kPresets) {
        const auto& gp = bkt::generated_pair(name);
        for (const auto& k : all_indicatrix_kinds()) {
            const DirectComparison c = compare_with_direct(gp.pair, k, 512);
            const std::string tag = std::string(name) + " " + kind_name(k);
            // Rows served by centred stencils.
            double interior = 0.0;
            for (std::size_t i = 3; i + 3 < c.t.size(); ++i)
                interior = std::max({interior, c.gap_kappa[i], c.gap_tau[i]});
            EXPECT_LT(interior, 1e-3) << tag;
            // On the short wobble arc the one-sided end stencils lose the
            // torsion to rounding; see EndRowsAreRoundingLimited.
            if (std::string(name) != "wobble") {
                EXPECT_LT(c.max_gap_kappa, 1e-3) << tag;
                EXPECT_LT(c.max_gap_tau, 1e-3) << tag;
            }
            EXPECT_LT(c.max_gap_kappa_jet, 1e-8) << tag;
            EXPECT_LT(c.max_gap_tau_jet, 1e-8) << tag;
            EXPECT_LT(c.max_gap_Gamma_jet, 1e-6) << tag;
            EXPECT_TRUE(c.masked.empty()) << tag;
        }
    }
}

TEST(Indicatrix, EndRowsAreRoundingLimited)
{
    // The end-row torsion gap grows as the grid is refined, so it is
    // rounding in the one-sided stencil and not a closed-form error.
    const auto& gp = bkt::generated_pair("wobble");
    const IndicatrixKind k{Side::Mate, Axis::Normal};
    const DirectComparison a = compare_with_direct(gp.pair, k, 256);
    const DirectComparison b = compare_with_direct(gp.pair, k, 1024);
    EXPECT_GT(b.gap_tau.front(), 4.0 * a.gap_tau.front());
    EXPECT_LT(b.max_gap_tau_jet, 1e-8);
}

TEST(Indicatrix, PrintedTangentFormsDisagree)
{
    const auto& gp = bkt::generated_pair("wobble");
    const DirectComparison c = compare_with_direct(gp.pair, {Side::Base, Axis::Tangent}, 256);
    EXPECT_GT(c.max_gap_printed_kappa, 1e-2);
}

TEST(Indicatrix, FramesAreOrthonormal)
{
    const auto& gp = bkt::generated_pair("cap");
    bkt::ExprGenerator rng(3);
    const Domain d = pair_domain(gp.pair);
    for (int i = 0; i < 100; ++i) {
        const double t = rng.uniform(d.lo, d.hi);
        for (const auto& k : all_indicatrix_kinds()) {
            const IndicatrixSample s = indicatrix_sample(gp.pair, k, t);
            EXPECT_NEAR(norm(s.T), 1.0, 1e-12);
            EXPECT_NEAR(norm(s.N), 1.0, 1e-12);
            EXPECT_NEAR(dot(s.T, s.N), 0.0, 1e-12);
            EXPECT_LT(norm(cross(s.T, s.N) - s.B), 1e-12);
            // The indicatrix tangent is tangent to the sphere.
            EXPECT_NEAR(dot(s.T, s.X), 0.0, 1e-12);
        }
    }
}

TEST(Indicatrix, NormalIndicatrixCurvatureAtLeastOne)
{
    for (const char* name : kPresets) {
        const auto& gp = bkt::generated_pair(name);
        for (double t : uniform_grid(pair_domain(gp.pair), 60))
            for (Side side : {Side::Base, Side::Mate}) {
                const IndicatrixSample s = normal_indicatrix_apparatus(gp.pair, side, t);
                EXPECT_GE(s.kappa, 1.0 - 1e-12);
                // On the unit sphere kappa_n^2 = 1 + Gamma^2 of the underlying curve.
                const PairSample ps = pair_sample(gp.pair, t);
                const double G = side == Side::Base ? ps.ri.Gamma : ps.ri_tilde.Gamma;
                EXPECT_NEAR(s.kappa * s.kappa, 1.0 + G * G, 1e-9 * s.kappa * s.kappa) << name;
            }
    }
}

TEST(Indicatrix, TorsionOverCurvatureIsTheGeodesicIndicator)
{
    for (const char* name : kPresets) {
        const auto& gp = bkt::generated_pair(name);
        const double eps = gp.pair.epsilon;
        for (double t : uniform_grid(pair_domain(gp.pair), 40)) {
            const PairSample ps = pair_sample(gp.pair, t);
            const IndicatrixSample st = indicatrix_sample(ps, gp.pair.epsilon, {Side::Base, Axis::Tangent});
            const IndicatrixSample sb = indicatrix_sample(ps, gp.pair.epsilon, {Side::Base, Axis::Binormal});
            const double G = ps.ri.Gamma;
            const double scale = std::max(1.0, std::fabs(G));
            EXPECT_NEAR(std::fabs(st.tau / st.kappa), std::fabs(G), 1e-8 * scale) << name;
            EXPECT_NEAR(sb.tau / sb.kappa, -eps * G, 1e-8 * scale) << name;
            // The tangent indicatrix curvature is not the binormal one.
            EXPECT_GT(std::fabs(st.kappa - std::fabs(sb.kappa)), 1e-3 * st.kappa) << name;
        }
    }
}

TEST(Indicatrix, FrameRelations)
{
    for (const char* name : kPresets) {
        const FrameRelationsReport r = frame_relations_check(bkt::generated_pair(name).pair, 256);
        EXPECT_EQ(r.relations.size(), 8u);
        EXPECT_EQ(r.masked_fraction, 0.0);
        for (const auto& rel : r.relations) {
            EXPECT_LT(rel.max_deviation, 1e-8) << name << " " << rel.id;
            EXPECT_LT(rel.max_deviation_jet, 1e-8) << name << " " << rel.id;
        }
    }
}

TEST(ArcLength, RelationsOnGeneratedPairs)
{
    for (const char* name : kPresets) {
        const auto& gp = bkt::generated_pair(name);
        const ArclengthRelations a = indicatrix_arclength_relations(gp.pair, 512);
        // Binormal indicatrix arc length is minus the total torsion.
        EXPECT_LT(bkt::rel(a.s_b.back(), -a.total_torsion), 1e-10) << name;
        EXPECT_LT(bkt::rel(std::fabs(a.s_b.back()), a.s_b_direct), 1e-5) << name;
        EXPECT_LT(bkt::rel(std::fabs(a.s_b_mate.back()), a.s_b_mate_direct), 1e-5) << name;
        EXPECT_LT(bkt::rel(std::fabs(a.s_n_mate_integral), a.s_n_direct), 1e-5) << name;
        EXPECT_EQ(a.s_t_selected, "frenet") << name;
        for (const auto& c : a.s_t_candidates)
            if (c.name == "frenet")
                EXPECT_LT(c.gap, 1e-5) << name;
            else
                EXPECT_GT(c.gap, 1e-3) << name << " " << c.name;
        // Affine law: s_b is affine in s*, with slope magnitude c1/lambda.
        EXPECT_LT(a.fit_b.rms_residual, 1e-8 * std::max(1.0, a.range_b)) << name;
        EXPECT_LT(bkt::rel(std::fabs(a.fit_b.slope), std::fabs(a.predicted_slope_b)), 1e-8) << name;
        EXPECT_LT(a.c1_stat.relative(1.0), 1e-8) << name;
    }
}

TEST(AffineFit, ExactLineAndErrors)
{
    const AffineFit f = affine_fit({0, 1, 2, 3}, {1, 3, 5, 7});
    EXPECT_NEAR(f.slope, 2.0, 1e-15);
    EXPECT_NEAR(f.intercept, 1.0, 1e-15);
    EXPECT_NEAR(f.rms_residual, 0.0, 1e-15);
    EXPECT_THROW(affine_fit({1, 1}, {0, 2}), Error);
    EXPECT_THROW(affine_fit({1}, {0}), Error);
}
