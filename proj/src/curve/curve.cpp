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

#include "bertrand_kit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

class AnalyticImpl final : public CurveImpl {
public:
    AnalyticImpl(std::array<Expr, 3> e, Domain d) : e_(std::move(e)), d_(d) {}
    Domain domain() const override { return d_; }
    JetVec3 jets(double t, int order) const override
    {
        return {evaluate_jet(e_[0], t, order), evaluate_jet(e_[1], t, order),
                evaluate_jet(e_[2], t, order)};
    }

private:
    std::array<Expr, 3> e_;
    Domain d_;
};

class SampledImpl final : public CurveImpl {
public:
    SampledImpl(std::shared_ptr<const std::vector<double>> t, std::shared_ptr<const std::vector<Vec3>> p)
        : t_(std::move(t)), p_(std::move(p))
    {
    }
    Domain domain() const override { return {t_->front(), t_->back()}; }
    JetVec3 jets(double t, int order) const override { return stencil_jets(*t_, *p_, t, order); }

private:
    std::shared_ptr<const std::vector<double>> t_;
    std::shared_ptr<const std::vector<Vec3>> p_;
};

void check_samples(const std::vector<double>& t, const std::vector<Vec3>& pts)
{
    if (t.size() != pts.size())
        fail(ErrorKind::Format, "parameter and point arrays differ in length");
    if (t.size() < 7)
        fail(ErrorKind::TooFewSamples, "sampled curve needs at least 7 samples, got " + std::to_string(t.size()));
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) fail(ErrorKind::Format, "sample parameters must be strictly increasing");
    for (const auto& p : pts)
        for (double v : p)
            if (!std::isfinite(v)) fail(ErrorKind::Format, "non-finite sample coordinate");
}

} // namespace

Curve Curve::analytic(Expr x, Expr y, Expr z, Domain d, std::string label)
{
    if (!(d.lo < d.hi) || !std::isfinite(d.lo) || !std::isfinite(d.hi))
        fail(ErrorKind::InvalidArgument, "analytic curve domain must satisfy lo < hi");
    Curve c;
    c.exprs_ = {std::move(x), std::move(y), std::move(z)};
    c.impl_ = std::make_shared<AnalyticImpl>(c.exprs_, d);
    c.kind_ = CurveKind::Analytic;
    c.label_ = std::move(label);
    return c;
}

Curve Curve::analytic(const std::string& x, const std::string& y, const std::string& z, Domain d,
                      std::string label)
{
    return analytic(parse_expression(x), parse_expression(y), parse_expression(z), d, std::move(label));
}

Curve Curve::sampled(std::vector<double> t, std::vector<Vec3> points, std::string label)
{
    check_samples(t, points);
    Curve c;
    c.t_ = std::make_shared<const std::vector<double>>(std::move(t));
    c.pts_ = std::make_shared<const std::vector<Vec3>>(std::move(points));
    c.impl_ = std::make_shared<SampledImpl>(c.t_, c.pts_);
    c.kind_ = CurveKind::Sampled;
    c.label_ = std::move(label);
    return c;
}

Curve Curve::derived(std::vector<double> t, std::vector<Vec3> points, std::shared_ptr<const CurveImpl> exact,
                     CurveOrigin origin, std::string label)
{
    Curve c = sampled(std::move(t), std::move(points), std::move(label));
    if (exact) c.impl_ = std::move(exact);
    c.origin_ = std::make_shared<const CurveOrigin>(std::move(origin));
    return c;
}

Curve Curve::with_label(std::string label) const
{
    Curve c = *this;
    c.label_ = std::move(label);
    return c;
}

Curve Curve::samples_only() const
{
    if (kind_ != CurveKind::Sampled) return *this;
    Curve c = *this;
    c.impl_ = std::make_shared<SampledImpl>(t_, pts_);
    c.origin_.reset();
    return c;
}

Domain Curve::domain() const
{
    if (!impl_) fail(ErrorKind::InvalidArgument, "empty curve");
    if (kind_ == CurveKind::Sampled) return {t_->front(), t_->back()};
    return impl_->domain();
}

namespace {

double checked_parameter(const Domain& d, double t)
{
    const double slack = 1e-12 * std::max(1.0, d.span());
    if (!(t >= d.lo - slack && t <= d.hi + slack)) {
        Error err(ErrorKind::OutOfDomain, "parameter " + std::to_string(t) + " outside [" +
                                              std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]");
        err.where = t;
        throw err;
    }
    return std::clamp(t, d.lo, d.hi);
}

} // namespace

JetVec3 Curve::jets(double t, int order) const
{
    return impl_->jets(checked_parameter(domain(), t), order);
}

JetVec3 Curve::derivative_jets(double t, int order) const
{
    return impl_->derivative_jets(checked_parameter(domain(), t), order);
}

Vec3 Curve::point(double t) const
{
    if (kind_ == CurveKind::Sampled) {
        // Exact node hits return the stored sample.
        auto it = std::lower_bound(t_->begin(), t_->end(), t);
        if (it != t_->end() && *it == t) return (*pts_)[static_cast<std::size_t>(it - t_->begin())];
    }
    return jets(t, 0).value();
}

const std::array<Expr, 3>& Curve::expressions() const
{
    if (kind_ != CurveKind::Analytic) fail(ErrorKind::InvalidArgument, "curve is not analytic");
    return exprs_;
}

const std::vector<double>& Curve::params() const
{
    if (kind_ != CurveKind::Sampled) fail(ErrorKind::InvalidArgument, "curve is not sampled");
    return *t_;
}

const std::vector<Vec3>& Curve::points() const
{
    if (kind_ != CurveKind::Sampled) fail(ErrorKind::InvalidArgument, "curve is not sampled");
    return *pts_;
}

std::vector<double> uniform_grid(Domain d, int n)
{
    if (n < 2) fail(ErrorKind::TooFewSamples, "grid needs at least 2 points");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = d.lo + d.span() * i / (n - 1);
    g.back() = d.hi;
    return g;
}

std::vector<std::array<double, 8>> fornberg_weights(double x0, const double* x, int n, int m)
{
    std::vector<std::array<double, 8>> c(static_cast<std::size_t>(n), std::array<double, 8>{});
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k > 0; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k > 0; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    return c;
}

JetVec3 stencil_jets(const std::vector<double>& t, const std::vector<Vec3>& pts, double x, int order)
{
    constexpr int kWidth = 7;
    const int n = static_cast<int>(t.size());
    auto it = std::lower_bound(t.begin(), t.end(), x);
    int nearest = static_cast<int>(it - t.begin());
    if (nearest > 0 && (nearest == n || x - t[nearest - 1] < t[nearest] - x)) --nearest;
    const int start = std::clamp(nearest - kWidth / 2, 0, n - kWidth);
    const int m = std::min(order, kWidth - 1);
    const auto w = fornberg_weights(x, t.data() + start, kWidth, m);

    JetVec3 r{Jet(order, 0.0), Jet(order, 0.0), Jet(order, 0.0)};
    double fact = 1.0;
    for (int k = 0; k <= m; ++k) {
        if (k > 1) fact *= k;
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int j = 0; j < kWidth; ++j) s += w[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                                                  pts[static_cast<std::size_t>(start + j)][static_cast<std::size_t>(c)];
            r[c][k] = s / fact;
        }
    }
    return r;
}

} // namespace bk
