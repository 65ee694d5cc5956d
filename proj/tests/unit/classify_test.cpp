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

#include <boost/numeric/odeint.hpp>
#include <gtest/gtest.h>

#include "bertrand_kit/classify.hpp"
#include "support.hpp"

using namespace bk;

namespace {

// A curve with kappa = cos^2(phi)/lambda and tau = cos(phi) sin(phi)/lambda
// satisfies kappa = lambda (kappa^2 + tau^2), so gamma + lambda N has the
// binormal along N of gamma. phi is kept monotone so the partner has no
// inflection. Integrated from the Frenet equations.
struct MannheimSample {
    Curve gamma;
    Curve partner;
};

MannheimSample mannheim_sample(double lambda)
{
    using State = std::array<double, 12>;  // position, T, N, B
    auto phi = [](double s) { return 0.4 + 0.2 * s + 0.05 * std::sin(2 * s); };
    auto rhs = [&](const State& x, State& dx, double s) {
        const double k = std::pow(std::cos(phi(s)), 2) / lambda;
        const double w = std::cos(phi(s)) * std::sin(phi(s)) / lambda;
        for (int i = 0; i < 3; ++i) {
            dx[i] = x[3 + i];
            dx[3 + i] = k * x[6 + i];
            dx[6 + i] = -k * x[3 + i] + w * x[9 + i];
            dx[9 + i] = -w * x[6 + i];
        }
    };
    State x{0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1};
    std::vector<double> t;
    std::vector<Vec3> p, q;
    auto observe = [&](const State& st, double s) {
        t.push_back(s);
        const Vec3 pos{st[0], st[1], st[2]};
        const Vec3 N{st[6], st[7], st[8]};
        p.push_back(pos);
        q.push_back(pos + lambda * N);
    };
    namespace ode = boost::numeric::odeint;
    ode::integrate_const(ode::make_dense_output(1e-13, 1e-13, ode::runge_kutta_dopri5<State>()), rhs, x, 0.0, 3.0,
                         3.0 / 1200, observe);
    return {Curve::sampled(t, p, "mannheim-gamma"), Curve::sampled(t, q, "mannheim-partner")};
}

} // namespace

TEST(CurveClass, Helix)
{
    const CurveClass c = classify_curve(bkt::helix(), 256);
    EXPECT_TRUE(c.general_helix);
    EXPECT_TRUE(c.slant_helix);
    EXPECT_FALSE(c.planar);
    EXPECT_FALSE(c.spherical);
    EXPECT_NEAR(c.metrics.kappa_max, 3.0 / 25.0, 1e-12);
    EXPECT_NEAR(c.metrics.tau_max, 4.0 / 25.0, 1e-12);
}

TEST(CurveClass, PlaneCircle)
{
    const CurveClass c = classify_curve(bkt::circle(2.0), 128);
    EXPECT_TRUE(c.planar);
    EXPECT_TRUE(c.spherical);
    EXPECT_TRUE(c.sphere_fit_degenerate);
    EXPECT_NEAR(c.metrics.sphere_radius, 2.0, 1e-10);
}

TEST(CurveClass, SphereCurve)
{
    const CurveClass c = classify_curve(bkt::preset_curve("wobble"), 256);
    EXPECT_TRUE(c.spherical);
    EXPECT_FALSE(c.sphere_fit_degenerate);
    EXPECT_NEAR(c.metrics.sphere_radius, 1.0, 1e-10);
    EXPECT_LT(norm(c.metrics.sphere_center), 1e-10);
}

TEST(CurveClass, GeneratedCurveIsGeneric)
{
    const CurveClass c = classify_curve(bkt::generated_pair("wobble").gen.curve, 256);
    EXPECT_FALSE(c.planar);
    EXPECT_FALSE(c.general_helix);
    EXPECT_FALSE(c.slant_helix);
    EXPECT_FALSE(c.spherical);
}

TEST(CurveClass, TooFewSamples)
{
    EXPECT_THROW(classify_curve(bkt::helix(), 10), Error);
}

TEST(SphericalHelix, ConstantRatio)
{
    EXPECT_TRUE(spherical_helix_check({1, 2, 4}, {0.5, 1, 2}).is_spherical_helix);
    const auto c = spherical_helix_check({1, 2, 4}, {0.5, 1, 3});
    EXPECT_FALSE(c.is_spherical_helix);
    EXPECT_NEAR(c.deviation, 1.0 / 6.0, 1e-15);  // ratios 0.5, 0.5, 0.75: mean 7/12, mean floor 1
}

TEST(Conditions, TwoArrangementsAgree)
{
    const auto& gp = bkt::generated_pair("cap");
    for (double t : uniform_grid({gp.pair.grid.front(), gp.pair.grid.back()}, 30)) {
        const PairSample s = pair_sample(gp.pair, t);
        const ConditionResidual a = helix_condition_residual(s.mate, s.ri_tilde);
        const ConditionResidual b = planar_condition_residual(s.mate, s.ri_tilde);
        EXPECT_NEAR(a.raw, b.raw, 1e-12 * std::max(1.0, std::fabs(a.raw)));
        EXPECT_NEAR(a.normalized, b.normalized, 1e-12);
    }
}

TEST(Conditions, HoldOnSlantPairOnly)
{
    const auto& slant = bkt::generated_pair("slant");
    const auto& generic = bkt::generated_pair("wobble");
    double worst_slant = 0.0, worst_generic = 0.0;
    for (double t : uniform_grid({slant.pair.grid.front(), slant.pair.grid.back()}, 40)) {
        const PairSample s = pair_sample(slant.pair, t);
        worst_slant = std::max(worst_slant, helix_condition_residual(s.mate, s.ri_tilde).normalized);
    }
    for (double t : uniform_grid({generic.pair.grid.front(), generic.pair.grid.back()}, 40)) {
        const PairSample s = pair_sample(generic.pair, t);
        worst_generic = std::max(worst_generic, helix_condition_residual(s.mate, s.ri_tilde).normalized);
    }
    EXPECT_LT(worst_slant, 1e-6);
    EXPECT_GT(worst_generic, 1e-2);
}

TEST(PairClassify, GeneratedPairIsBertrand)
{
    const auto& gp = bkt::generated_pair("wobble");
    const PairClass pc = pair_classify(gp.gen.curve, gp.mate, 512);
    EXPECT_EQ(pc.verdict, PairVerdict::Bertrand);
    ASSERT_EQ(pc.evidence.size(), 3u);
    EXPECT_NEAR(std::fabs(pc.evidence[0].offset_mean), gp.gen.lambda_nominal, 1e-8);
    EXPECT_FALSE(pc.evidence[1].pass);
    EXPECT_FALSE(pc.evidence[2].pass);
}

TEST(PairClassify, Mannheim)
{
    const MannheimSample m = mannheim_sample(1.0);
    const PairClass pc = pair_classify(m.partner, m.gamma, 256);
    EXPECT_EQ(pc.verdict, PairVerdict::Mannheim) << pc.evidence[1].failed;
    EXPECT_NEAR(std::fabs(pc.evidence[1].offset_mean), 1.0, 1e-6);
    EXPECT_FALSE(pc.evidence[0].pass);
}

TEST(PairClassify, InvoluteOfACircle)
{
    const Domain d{0.5, 2.0};
    const Curve c = bkt::circle(1.0, d);
    const Curve inv = Curve::analytic("cos(t) + t*sin(t)", "sin(t) - t*cos(t)", "0", d);
    const PairClass pc = pair_classify(c, inv, 256);
    EXPECT_EQ(pc.verdict, PairVerdict::InvoluteEvolute) << pc.evidence[2].failed;
    EXPECT_EQ(pc.evidence[0].failed, "offset-not-normal");
}

TEST(PairClassify, UnrelatedCurves)
{
    const Domain d{0.5, 2.0};
    const PairClass pc = pair_classify(bkt::helix(3, 4, d), Curve::analytic("t", "t^2", "t^3", d), 256);
    EXPECT_EQ(pc.verdict, PairVerdict::None);
    EXPECT_EQ(verdict_name(pc.verdict), "none");
}

TEST(TheoremSuite, GenericPair)
{
    const TheoremReport r = theorem_suite(bkt::generated_pair("wobble").pair, 512);
    EXPECT_TRUE(r.identities_pass());
    EXPECT_EQ(r.entries.size(), theorem_ids().size());
    for (const auto& e : r.entries) {
        if (e.kind == EntryKind::Identity || e.kind == EntryKind::Equivalence || e.kind == EntryKind::Classification)
            EXPECT_TRUE(e.pass) << e.id << " residual " << e.max_residual;
        if (e.kind == EntryKind::Condition) {
            // The condition fails on a generic pair, and so does its partner flag.
            EXPECT_FALSE(e.pass) << e.id;
            ASSERT_EQ(e.flags.size(), 2u);
            EXPECT_EQ(e.flags[0], e.flags[1]) << e.id;
        }
    }
    EXPECT_LT(r.find("th2")->max_residual, 1e-5);
    EXPECT_LT(r.find("constraint-eq")->max_residual, 1e-6);
}

TEST(TheoremSuite, SlantPair)
{
    const TheoremReport r = theorem_suite(bkt::generated_pair("slant").pair, 512);
    EXPECT_TRUE(r.identities_pass());
    const TheoremEntry* cr18 = r.find("cr18");
    ASSERT_NE(cr18, nullptr);
    for (bool f : cr18->flags) EXPECT_TRUE(f);
    for (const char* id : {"th8", "th11", "th17"}) {
        const TheoremEntry* e = r.find(id);
        EXPECT_TRUE(e->pass) << id;
        EXPECT_EQ(e->flags[0], e->flags[1]) << id;
    }
}

TEST(TheoremSuite, ToleranceOverrides)
{
    const auto& pair = bkt::generated_pair("wobble").pair;
    EXPECT_THROW(theorem_suite(pair, 512, {{"no-such-id", 1.0}}), Error);
    const TheoremReport strict = theorem_suite(pair, 256, {{"th3", 1e-30}});
    EXPECT_FALSE(strict.find("th3")->pass);
    EXPECT_FALSE(strict.identities_pass());
    EXPECT_THROW(theorem_suite(pair, 100), Error);
}
