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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bertrand_kit/bertrand.hpp"
#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

JetVec3 constant_jets(const Vec3& p, int order)
{
    return {Jet(order, p[0]), Jet(order, p[1]), Jet(order, p[2])};
}

// Position jets from a value and velocity jets of one order less.
JetVec3 integrate_jets(const Vec3& p, const JetVec3& v, int order)
{
    JetVec3 r = constant_jets(p, order);
    for (int c = 0; c < 3; ++c)
        for (int k = 1; k <= order; ++k) r[c][k] = v[c][k - 1] / k;
    return r;
}

std::size_t nearest_node(const std::vector<double>& t, double x)
{
    auto it = std::lower_bound(t.begin(), t.end(), x);
    std::size_t i = static_cast<std::size_t>(it - t.begin());
    if (i == t.size() || (i > 0 && x - t[i - 1] < t[i] - x)) --i;
    return i;
}

class GeneratorImpl final : public CurveImpl {
public:
    GeneratorImpl(Curve sphere, double a, double omega, std::shared_ptr<const std::vector<double>> t,
                  std::shared_ptr<const std::vector<Vec3>> p)
        : sphere_(std::move(sphere)), a_(a), cot_(std::cos(omega) / std::sin(omega)), t_(std::move(t)),
          p_(std::move(p))
    {
    }

    Domain domain() const override { return {t_->front(), t_->back()}; }

    JetVec3 derivative_jets(double t, int order) const override
    {
        const JetVec3 c = sphere_.jets(t, order + 1);
        const JetVec3 cp = c.differentiate();
        const JetVec3 cc = c.truncated(order);
        return a_ * (norm(cp) * cc + cot_ * cross(cc, cp));
    }

    JetVec3 jets(double t, int order) const override
    {
        const std::size_t i = nearest_node(*t_, t);
        Vec3 p = (*p_)[i];
        if (t != (*t_)[i]) p = p + short_segment((*t_)[i], t);
        if (order == 0) return constant_jets(p, 0);
        return integrate_jets(p, derivative_jets(t, order - 1), order);
    }

    // One node spacing at most; a fixed 30-point Gauss rule is exact to
    // roundoff for these smooth integrands.
    Vec3 short_segment(double t0, double t1) const
    {
        Vec3 r{};
        for (int c = 0; c < 3; ++c) {
            auto f = [&](double x) { return derivative_jets(x, 0)[c].value(); };
            r[static_cast<std::size_t>(c)] = boost::math::quadrature::gauss<double, 30>::integrate(f, t0, t1);
        }
        return r;
    }

    Vec3 segment(double t0, double t1) const
    {
        Vec3 r{};
        for (int c = 0; c < 3; ++c) {
            auto f = [&](double x) { return derivative_jets(x, 0)[c].value(); };
            double err = 0.0;
            double l1 = 0.0;
            r[static_cast<std::size_t>(c)] = GK::integrate(f, t0, t1, 8, 1e-10, &err, &l1);
            if (err > 1e-10)
                fail(ErrorKind::NonConvergent, "generator quadrature did not converge near t=" + std::to_string(t0));
        }
        return r;
    }

private:
    Curve sphere_;
    double a_;
    double cot_;
    std::shared_ptr<const std::vector<double>> t_;
    std::shared_ptr<const std::vector<Vec3>> p_;
};

class OffsetImpl final : public CurveImpl {
public:
    OffsetImpl(Curve base, double lambda) : base_(std::move(base)), lambda_(lambda) {}
    Domain domain() const override { return base_.domain(); }

    JetVec3 derivative_jets(double t, int order) const override
    {
        const JetVec3 v = base_.derivative_jets(t, order + 2);
        const FrameJets f = frame_jets_from_velocity(v);
        return v.truncated(order) + lambda_ * f.N.differentiate();
    }

    JetVec3 jets(double t, int order) const override
    {
        const Vec3 p = base_.jets(t, 0).value();
        const FrameJets f = frame_jets_from_velocity(base_.derivative_jets(t, 2));
        const Vec3 q = p + lambda_ * f.N.value();
        if (order == 0) return constant_jets(q, 0);
        return integrate_jets(q, derivative_jets(t, order - 1), order);
    }

private:
    Curve base_;
    double lambda_;
};

class PerturbImpl final : public CurveImpl {
public:
    PerturbImpl(Curve base, std::array<Expr, 3> delta) : base_(std::move(base)), delta_(std::move(delta)) {}
    Domain domain() const override { return base_.domain(); }

    JetVec3 jets(double t, int order) const override
    {
        const JetVec3 d{evaluate_jet(delta_[0], t, order), evaluate_jet(delta_[1], t, order),
                        evaluate_jet(delta_[2], t, order)};
        return base_.jets(t, order) + d;
    }

    JetVec3 derivative_jets(double t, int order) const override
    {
        const JetVec3 d{evaluate_jet(delta_[0], t, order + 1), evaluate_jet(delta_[1], t, order + 1),
                        evaluate_jet(delta_[2], t, order + 1)};
        return base_.derivative_jets(t, order) + d.differentiate();
    }

private:
    Curve base_;
    std::array<Expr, 3> delta_;
};

std::vector<double> node_grid(const Domain& d, int n)
{
    if (n < 16) fail(ErrorKind::TooFewSamples, "derived curves need n >= 16 samples");
    return uniform_grid(d, n);
}

} // namespace

Curve rebuild_derived(const CurveOrigin& origin, std::vector<double> t, std::vector<Vec3> points,
                      std::string label)
{
    if (!origin.parent) fail(ErrorKind::Format, "derived curve recipe has no parent curve");
    std::shared_ptr<const CurveImpl> impl;
    switch (origin.kind) {
    case CurveOrigin::Kind::BertrandGenerator: {
        auto tp = std::make_shared<const std::vector<double>>(t);
        auto pp = std::make_shared<const std::vector<Vec3>>(points);
        impl = std::make_shared<GeneratorImpl>(*origin.parent, origin.a, origin.omega, tp, pp);
        break;
    }
    case CurveOrigin::Kind::NormalOffset:
        impl = std::make_shared<OffsetImpl>(*origin.parent, origin.lambda);
        break;
    case CurveOrigin::Kind::Perturbation:
        for (const auto& e : origin.delta)
            if (!e) fail(ErrorKind::Format, "perturbation recipe lacks a component");
        impl = std::make_shared<PerturbImpl>(*origin.parent, origin.delta);
        break;
    }
    return Curve::derived(std::move(t), std::move(points), std::move(impl), origin, std::move(label));
}

MateResult construct_mate(const Curve& base, double lambda, int n)
{
    if (!std::isfinite(lambda)) fail(ErrorKind::InvalidArgument, "offset must be finite");
    if (lambda == 0.0) return {base, {}};
    const std::vector<double> grid = node_grid(base.domain(), n);
    OffsetImpl impl(base, lambda);
    auto sw = sweep<Vec3>(grid.size(), [&](std::size_t i) { return impl.jets(grid[i], 0).value(); });
    std::vector<double> t;
    std::vector<Vec3> p;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!sw.values[i]) continue;
        t.push_back(grid[i]);
        p.push_back(*sw.values[i]);
    }
    MateResult r;
    r.masked = masked_intervals(grid, sw.reasons);
    if (t.size() < 7) fail(ErrorKind::Singular, "offset curve undefined on nearly the whole grid");
    CurveOrigin o;
    o.kind = CurveOrigin::Kind::NormalOffset;
    o.parent = std::make_shared<const Curve>(base);
    o.lambda = lambda;
    const std::string label = base.label().empty() ? "mate" : base.label() + "-mate";
    r.curve = rebuild_derived(o, std::move(t), std::move(p), label);
    return r;
}

Curve perturb_curve(const Curve& base, const std::array<Expr, 3>& delta, int n)
{
    const std::vector<double> grid = node_grid(base.domain(), n);
    PerturbImpl impl(base, delta);
    std::vector<Vec3> p(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { p[i] = impl.jets(grid[i], 0).value(); });
    CurveOrigin o;
    o.kind = CurveOrigin::Kind::Perturbation;
    o.parent = std::make_shared<const Curve>(base);
    o.delta = delta;
    return rebuild_derived(o, grid, std::move(p), base.label().empty() ? "perturbed" : base.label() + "-perturbed");
}

double sphere_geodesic_curvature(const Curve& c, double t)
{
    const JetVec3 j = c.jets(t, 2);
    const Vec3 p = j.value();
    const Vec3 d1 = j.coeff(1);
    const Vec3 d2 = 2.0 * j.coeff(2);
    const double sp = norm(d1);
    if (!(sp > kRegularityFloor)) fail(ErrorKind::DegenerateSphereCurve, "sphere curve has vanishing velocity");
    return dot(p, cross(d1, d2)) / (sp * sp * sp);
}

GeneratedCurve generate_bertrand_curve(const Curve& sphere, double a, double omega, int n)
{
    if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorKind::InvalidArgument, "generator scale a must be positive");
    if (!(omega > 0.0 && omega < std::numbers::pi) || std::fabs(std::cos(omega)) < 1e-12)
        fail(ErrorKind::InvalidArgument, "omega must lie in (0, pi) and differ from pi/2");
    const std::vector<double> grid = node_grid(sphere.domain(), n);

    std::vector<double> kg(grid.size());
    std::vector<double> radius(grid.size());
    std::vector<double> speed(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const JetVec3 j = sphere.jets(grid[i], 2);
        radius[i] = norm(j.value());
        speed[i] = norm(j.coeff(1));
        kg[i] = speed[i] > kRegularityFloor ? sphere_geodesic_curvature(sphere, grid[i]) : 0.0;
    });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::fabs(radius[i] - 1.0) > 1e-8) {
            Error err(ErrorKind::NotSpherical, "input curve leaves the unit sphere at t=" + std::to_string(grid[i]));
            err.where = grid[i];
            throw err;
        }
        if (!(speed[i] > kRegularityFloor)) {
            Error err(ErrorKind::DegenerateSphereCurve, "c x c' vanishes at t=" + std::to_string(grid[i]));
            err.where = grid[i];
            throw err;
        }
    }
    const ConstancyStat kgs = constancy(kg);
    double kg_max = 0.0;
    for (double v : kg) kg_max = std::max(kg_max, std::fabs(v));
    if (kg_max < 1e-8)
        fail(ErrorKind::DegenerateSphereCurve,
             "sphere curve is a great-circle arc; the generated curve would be a circular helix");

    GeneratedCurve out;
    out.a = a;
    out.omega = omega;
    out.n = n;
    if (kgs.max_dev <= 1e-6 * std::max(1.0, std::fabs(kgs.mean))) {
        out.helical = true;
        out.warning = "sphere curve has constant geodesic curvature; the generated curve is a circular helix";
    }
    const double kmid = kg[kg.size() / 2];
    out.lambda_nominal = a * (std::sin(omega) - kmid * std::cos(omega) >= 0.0 ? 1.0 : -1.0);

    auto tp = std::make_shared<const std::vector<double>>(grid);
    auto seed = std::make_shared<const std::vector<Vec3>>(grid.size(), Vec3{});
    GeneratorImpl integrator(sphere, a, omega, tp, seed);
    std::vector<Vec3> steps(grid.size(), Vec3{});
    parallel_for(grid.size() - 1,
                 [&](std::size_t i) { steps[i + 1] = integrator.segment(grid[i], grid[i + 1]); });
    std::vector<Vec3> pts(grid.size(), Vec3{});
    for (std::size_t i = 1; i < grid.size(); ++i) pts[i] = pts[i - 1] + steps[i];

    CurveOrigin o;
    o.kind = CurveOrigin::Kind::BertrandGenerator;
    o.parent = std::make_shared<const Curve>(sphere);
    o.a = a;
    o.omega = omega;
    o.lambda = out.lambda_nominal;
    const std::string label = sphere.label().empty() ? "bertrand" : sphere.label() + "-bertrand";
    out.curve = rebuild_derived(o, grid, std::move(pts), label);
    return out;
}

} // namespace bk
