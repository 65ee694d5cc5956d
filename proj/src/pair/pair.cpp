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
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "bertrand_kit/bertrand.hpp"
#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

constexpr double kDenFloor = 1e-10;

[[noreturn]] void degenerate(const std::string& what, double t)
{
    Error err(ErrorKind::DegenerateRatio, what + " at t=" + std::to_string(t));
    err.where = t;
    throw err;
}

} // namespace

void require_ratios(const RatioInvariants& ri)
{
    if (!ri.g_defined) degenerate("g undefined (kappa' = 0, helical case excluded)", ri.t);
    if (std::fabs(ri.f) <= kDenFloor && std::fabs(ri.g) <= kDenFloor)
        degenerate("f = g = 0 (planar case excluded)", ri.t);
    if (std::fabs(ri.g - ri.f) <= kDenFloor) degenerate("g = f", ri.t);
}

namespace {

[[noreturn]] void not_a_pair(const std::string& reason, const std::string& detail)
{
    Error err(ErrorKind::NotAPair, "not a Bertrand pair (" + reason + "): " + detail);
    err.reason = reason;
    throw err;
}

} // namespace

RatioInvariants ratio_invariants(const FrenetData& fd)
{
    if (!(fd.kappa > kRegularityFloor)) {
        Error err(ErrorKind::Singular, "curvature below regularity floor at t=" + std::to_string(fd.t));
        err.where = fd.t;
        throw err;
    }
    RatioInvariants ri;
    ri.t = fd.t;
    ri.f = fd.tau / fd.kappa;
    ri.g_defined = std::fabs(fd.dkappa_ds) >= kRatioFloor;
    ri.g = ri.g_defined ? fd.dtau_ds / fd.dkappa_ds : std::numeric_limits<double>::quiet_NaN();
    ri.Gamma = slant_geodesic_indicator(fd);
    return ri;
}

double bertrand_lambda(const RatioInvariants& ri, double kappa)
{
    require_ratios(ri);
    return ri.g / (kappa * (ri.g - ri.f));
}

double bertrand_lambda_from_mate(const RatioInvariants& ri, double kappa, int eps)
{
    require_ratios(ri);
    return -eps * ri.g / (kappa * (ri.g - ri.f));
}

MateApparatus mate_apparatus_from_base(const FrenetData& fd, const RatioInvariants& ri, int eps)
{
    require_ratios(ri);
    const double f = ri.f;
    const double g = ri.g;
    if (std::fabs(f) <= kDenFloor) degenerate("f = 0 (planar case excluded)", ri.t);
    const double q = std::sqrt(1.0 + g * g);
    MateApparatus m;
    m.T = (-1.0 / q) * (fd.T - g * fd.B);
    m.N = static_cast<double>(eps) * fd.N;
    m.B = (-eps / q) * (g * fd.T + fd.B);
    m.kappa = -eps * fd.kappa * (g - f) * (1.0 + f * g) / (f * (1.0 + g * g));
    m.tau = fd.kappa * (g - f) * (g - f) / (f * (1.0 + g * g));
    m.ds_ratio = f * q / (g - f);
    return m;
}

int mate_orientation(const RatioInvariants& ri)
{
    require_ratios(ri);
    return ri.f * (ri.g - ri.f) >= 0.0 ? 1 : -1;
}

int natural_mate_orientation(const FrenetData& base, const FrenetData& mate_t)
{
    return dot(mate_t.T, base.T) <= 0.0 ? 1 : -1;
}

FrenetData mate_natural(const FrenetData& mate_t, const FrenetData& base)
{
    return natural_mate_orientation(base, mate_t) > 0 ? mate_t : reversed(mate_t);
}

double geodesic_indicator_closed_form(const FrenetData& p, const RatioInvariants& ri)
{
    require_ratios(ri);
    const double f = ri.f;
    const double w = 1.0 + f * f;
    return -p.dkappa_ds * (ri.g - f) / (p.kappa * p.kappa * w * std::sqrt(w));
}

double mate_geodesic_indicator_closed_form(const FrenetData& fd, const RatioInvariants& ri)
{
    require_ratios(ri);
    const double f = ri.f;
    const double g = ri.g;
    if (std::fabs(f) <= kDenFloor) degenerate("f = 0 (planar case excluded)", ri.t);
    const double h = (1.0 + f * g) * (1.0 + f * g) + (g - f) * (g - f);
    const double ds_dsstar = (g - f) / (f * std::sqrt(1.0 + g * g));
    return fd.dkappa_ds * f * (1.0 + g * g) * (1.0 + g * g) / (-fd.kappa * fd.kappa * h * std::sqrt(h)) * ds_dsstar;
}

double ConstancyStat::relative(double floor) const
{
    return max_dev / std::max(std::fabs(mean), floor);
}

ConstancyStat constancy(const std::vector<double>& values)
{
    ConstancyStat s;
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v)) continue;
        sum += v;
        ++s.samples;
    }
    if (s.samples == 0) return s;
    s.mean = sum / s.samples;
    for (double v : values)
        if (std::isfinite(v)) s.max_dev = std::max(s.max_dev, std::fabs(v - s.mean));
    return s;
}

namespace {

struct DetectPoint {
    FrenetData base;
    FrenetData mate;
    Vec3 offset{};
};

} // namespace

BertrandPairModel detect_bertrand(const Curve& base, const Curve& mate, int n, const PairOptions& opt)
{
    if (n < 8) fail(ErrorKind::TooFewSamples, "pair detection needs n >= 8");
    const Domain db = base.domain();
    const Domain dm = mate.domain();
    const Domain d{std::max(db.lo, dm.lo), std::min(db.hi, dm.hi)};
    if (!(d.hi > d.lo)) fail(ErrorKind::GridMismatch, "curve parameter domains do not overlap");

    BertrandPairModel m;
    m.base = base;
    m.mate = mate;
    m.grid = uniform_grid(d, n);
    const auto& grid = m.grid;

    auto sw = sweep<DetectPoint>(grid.size(), [&](std::size_t i) {
        DetectPoint p;
        p.base = frenet_apparatus(base, grid[i]);
        p.mate = frenet_apparatus(mate, grid[i]);
        p.offset = mate.jets(grid[i], 0).value() - base.jets(grid[i], 0).value();
        return p;
    });
    m.masked = masked_intervals(grid, sw.reasons);

    Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!sw.values[i]) continue;
        ok.push_back(i);
        const Vec3 p = base.jets(grid[i], 0).value();
        for (int c = 0; c < 3; ++c) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
    }
    if (ok.size() < 8) fail(ErrorKind::Singular, "too few regular grid points to test the pair");
    const double scale = std::max(1.0, norm(hi - lo));

    double max_offset = 0.0;
    for (std::size_t i : ok) max_offset = std::max(max_offset, norm(sw.values[i]->offset));
    if (max_offset <= 1e-12 * scale) {
        m.degenerate = true;
        m.lambda = 0.0;
        m.epsilon = 1;
    } else {
        std::vector<double> lam;
        for (std::size_t i : ok) {
            const auto& p = *sw.values[i];
            const double l = dot(p.offset, p.base.N);
            lam.push_back(l);
            m.diag.max_offset_perp = std::max(m.diag.max_offset_perp, norm(p.offset - l * p.base.N) / scale);
        }
        if (m.diag.max_offset_perp > opt.tol_offset)
            not_a_pair("offset-not-normal", "max normal-plane residual " + std::to_string(m.diag.max_offset_perp));
        m.diag.lambda = constancy(lam);
        if (m.diag.lambda.max_dev >= opt.tol_const * (1.0 + std::fabs(m.diag.lambda.mean)))
            not_a_pair("lambda-varies", "max deviation " + std::to_string(m.diag.lambda.max_dev));
        m.lambda = m.diag.lambda.mean;

        const auto& mid = *sw.values[ok[ok.size() / 2]];
        m.epsilon = dot(mid.base.N, mid.mate.N) >= 0.0 ? 1 : -1;
        for (std::size_t i : ok) {
            const auto& p = *sw.values[i];
            const double c = dot(p.base.N, p.mate.N);
            m.diag.max_normal_gap = std::max(m.diag.max_normal_gap, 1.0 - std::fabs(c));
            if ((c >= 0.0 ? 1 : -1) != m.epsilon)
                not_a_pair("normals-not-aligned", "sign of <N, N~> changes along the grid");
        }
        if (m.diag.max_normal_gap > opt.tol_align)
            not_a_pair("normals-not-aligned", "max 1 - |<N, N~>| " + std::to_string(m.diag.max_normal_gap));
    }

    std::vector<double> q1, q2, p1, p2, g, gt;
    for (std::size_t i : ok) {
        const auto& p = *sw.values[i];
        const RatioInvariants ri = ratio_invariants(p.base);
        const RatioInvariants rt = ratio_invariants(p.mate);
        if (ri.g_defined) {
            const double w = std::sqrt(1.0 + ri.g * ri.g);
            q1.push_back(1.0 / w);
            q2.push_back(ri.g / w);
            g.push_back(ri.g);
        }
        if (rt.g_defined) {
            const double w = std::sqrt(1.0 + rt.g * rt.g);
            p1.push_back(1.0 / w);
            p2.push_back(rt.g / w);
            gt.push_back(rt.g);
        }
    }
    m.diag.q1 = constancy(q1);
    m.diag.q2 = constancy(q2);
    m.diag.p1 = constancy(p1);
    m.diag.p2 = constancy(p2);
    m.diag.g = constancy(g);
    m.diag.g_tilde = constancy(gt);

    const int rows = std::max(16, n - 1);
    m.s_base = build_arclength_table(base, rows);
    m.s_mate = m.degenerate ? m.s_base : build_arclength_table(mate, rows);
    return m;
}

PairSample pair_sample(const BertrandPairModel& pair, double t)
{
    PairSample s;
    s.t = t;
    s.base = frenet_apparatus(pair.base, t);
    s.mate_t = frenet_apparatus(pair.mate, t);
    s.sigma = natural_mate_orientation(s.base, s.mate_t);
    s.mate = s.sigma > 0 ? s.mate_t : reversed(s.mate_t);
    s.ri = ratio_invariants(s.base);
    s.ri_tilde = ratio_invariants(s.mate);
    return s;
}

ConstraintValue pair_constraint_residual(const PairSample& s, int eps)
{
    require_ratios(s.ri);
    require_ratios(s.ri_tilde);
    const double k = s.base.kappa;
    const double kt = s.mate.kappa;
    const double f = s.ri.f, g = s.ri.g, ft = s.ri_tilde.f, gt = s.ri_tilde.g;
    const double a = kt * g * gt;
    const double b = eps * k * g * gt;
    const double c = eps * f * gt * k;
    const double d = ft * g * kt;
    ConstraintValue v;
    v.raw = a + b - c - d;
    const double scale = std::fabs(a) + std::fabs(b) + std::fabs(c) + std::fabs(d);
    v.normalized = scale > 0.0 ? std::fabs(v.raw) / scale : 0.0;
    return v;
}

ConstraintValue pair_constraint_residual(const BertrandPairModel& pair, double t)
{
    return pair_constraint_residual(pair_sample(pair, t), pair.epsilon);
}

LinearRelationFit linear_relation_fit(const Curve& c, int n)
{
    if (n < 8) fail(ErrorKind::TooFewSamples, "linear relation fit needs n >= 8");
    const std::vector<double> grid = uniform_grid(c.domain(), n);
    auto sw = sweep<FrenetData>(grid.size(), [&](std::size_t i) { return frenet_apparatus(c, grid[i]); });
    std::vector<const FrenetData*> pts;
    for (const auto& v : sw.values)
        if (v) pts.push_back(&*v);
    if (pts.size() < 8) fail(ErrorKind::Singular, "too few regular samples for the fit");

    Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()), 2);
    Eigen::VectorXd rhs = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        A(static_cast<Eigen::Index>(i), 0) = pts[i]->kappa;
        A(static_cast<Eigen::Index>(i), 1) = pts[i]->tau;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    LinearRelationFit fit;
    fit.condition = sv(0) > 0.0 ? sv(1) / sv(0) : 0.0;
    if (fit.condition < 1e-10) {
        Error err(ErrorKind::IllConditioned,
                  "curvature and torsion samples are linearly dependent (rank-deficient fit)");
        throw err;
    }
    const Eigen::Vector2d x = svd.solve(rhs);
    fit.a = x(0);
    fit.b = x(1);
    fit.residual = std::sqrt((A * x - rhs).squaredNorm() / static_cast<double>(pts.size()));
    return fit;
}

} // namespace bk
