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
#include <cstdio>
#include <string>

#include <boost/math/interpolators/cubic_hermite.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bertrand_kit/curve.hpp"
#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

using Hermite = boost::math::interpolators::cubic_hermite<std::vector<double>>;

constexpr double kAbsTol = 1e-10;
constexpr int kMaxDepth = 20;

// Fritsch-Carlson limiter: keeps each cubic piece monotone when the data is.
void limit_slopes(const std::vector<double>& x, const std::vector<double>& y, std::vector<double>& m)
{
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double delta = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        if (delta <= 0.0) {
            m[i] = m[i + 1] = 0.0;
            continue;
        }
        m[i] = std::max(m[i], 0.0);
        m[i + 1] = std::max(m[i + 1], 0.0);
        const double a = m[i] / delta;
        const double b = m[i + 1] / delta;
        const double r = a * a + b * b;
        if (r > 9.0) {
            const double k = 3.0 / std::sqrt(r);
            m[i] = k * a * delta;
            m[i + 1] = k * b * delta;
        }
    }
}

[[noreturn]] void quadrature_failure(double err)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", err);
    fail(ErrorKind::NonConvergent, std::string("arc length quadrature error estimate ") + buf + " above tolerance");
}

} // namespace

struct ArcLengthTable::Interp {
    Hermite forward;
    Hermite inverse;
};

double speed_at(const Curve& c, double t)
{
    return norm(c.derivative_jets(t, 0).value());
}

double arc_length(const Curve& c, double t0, double t1)
{
    if (t0 == t1) return 0.0;
    // Domain check up front so the integrand never throws mid-quadrature.
    speed_at(c, t0);
    speed_at(c, t1);
    auto f = [&](double t) { return speed_at(c, t); };
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

    // A tabulated curve's stencil speed jumps where the nearest node changes
    // and carries rounding noise from the weights, which an adaptive error
    // estimate chases forever. Each cell between those midpoints is smooth,
    // so it gets one 15-point Kronrod rule, and the error is read from the
    // composite Kronrod and Gauss sums, where the noise cancels.
    if (c.kind() == CurveKind::Sampled && c.origin() == nullptr) {
        const auto& t = c.params();
        const double lo = std::min(t0, t1), hi = std::max(t0, t1);
        std::vector<double> cuts{lo};
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const double m = 0.5 * (t[i] + t[i + 1]);
            if (m > lo && m < hi) cuts.push_back(m);
        }
        cuts.push_back(hi);
        double kronrod = 0.0, gauss = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            kronrod += GK::integrate(f, cuts[i], cuts[i + 1], 0, 1.0);
            gauss += boost::math::quadrature::gauss<double, 7>::integrate(f, cuts[i], cuts[i + 1]);
        }
        const double err = std::fabs(kronrod - gauss);
        if (!std::isfinite(kronrod) || err > std::max(kAbsTol, 1e-14 * kronrod)) quadrature_failure(err);
        return t1 < t0 ? -kronrod : kronrod;
    }

    double err = 0.0;
    double l1 = 0.0;
    GK::integrate(f, t0, t1, 0, 1.0, &err, &l1);
    // The quadrature takes a tolerance relative to the L1 norm; the floor
    // keeps very long arcs from recursing on roundoff.
    const double rel = std::max(kAbsTol / std::max(l1, 1e-300), 1e-14);
    const double v = GK::integrate(f, t0, t1, kMaxDepth, rel, &err, &l1);
    if (!std::isfinite(v) || err > std::max(kAbsTol, 1e-14 * l1)) quadrature_failure(err);
    return v;
}

ArcLengthTable::ArcLengthTable(std::vector<double> t, std::vector<double> s, std::vector<double> speed)
    : t_(std::move(t)), s_(std::move(s))
{
    if (t_.size() != s_.size() || t_.size() != speed.size() || t_.size() < 2)
        fail(ErrorKind::InvalidArgument, "arc length table columns must have equal length >= 2");
    for (std::size_t i = 1; i < t_.size(); ++i)
        if (!(s_[i] > s_[i - 1]) || !(t_[i] > t_[i - 1]))
            fail(ErrorKind::InvalidArgument, "arc length table must be strictly increasing");
    std::vector<double> ds = speed;
    limit_slopes(t_, s_, ds);
    std::vector<double> dt(speed.size());
    for (std::size_t i = 0; i < speed.size(); ++i) dt[i] = speed[i] > 0.0 ? 1.0 / speed[i] : 0.0;
    limit_slopes(s_, t_, dt);
    auto tf = t_, sf = s_, ti = t_, si = s_;
    interp_ = std::make_shared<const Interp>(
        Interp{Hermite(std::move(tf), std::move(sf), std::move(ds)), Hermite(std::move(si), std::move(ti), std::move(dt))});
}

double ArcLengthTable::s_of_t(double t) const
{
    if (!interp_) fail(ErrorKind::InvalidArgument, "empty arc length table");
    return interp_->forward(std::clamp(t, t_.front(), t_.back()));
}

double ArcLengthTable::t_of_s(double s) const
{
    if (!interp_) fail(ErrorKind::InvalidArgument, "empty arc length table");
    return interp_->inverse(std::clamp(s, s_.front(), s_.back()));
}

ArcLengthTable build_arclength_table(const Curve& c, int n)
{
    if (n < 16) fail(ErrorKind::TooFewSamples, "arc length table needs n >= 16");
    std::vector<double> t = uniform_grid(c.domain(), n + 1);
    std::vector<double> s(t.size(), 0.0);
    std::vector<double> v(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        v[i] = speed_at(c, t[i]);
        if (i > 0) s[i] = s[i - 1] + arc_length(c, t[i - 1], t[i]);
    }
    return ArcLengthTable(std::move(t), std::move(s), std::move(v));
}

} // namespace bk
