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

#include "bertrand_kit/indicatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>

#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

const FrenetData& side_curve(const PairSample& s, Side side) { return side == Side::Base ? s.base : s.mate; }
const FrenetData& partner(const PairSample& s, Side side) { return side == Side::Base ? s.mate : s.base; }
const RatioInvariants& partner_ri(const PairSample& s, Side side) { return side == Side::Base ? s.ri_tilde : s.ri; }

/// d(partner natural arc length)/dt.
double partner_rate(const PairSample& s, Side side)
{
    return side == Side::Base ? s.sigma * s.mate_t.speed : s.base.speed;
}

Vec3 axis_vector(const FrenetData& fd, Axis a)
{
    return a == Axis::Tangent ? fd.T : (a == Axis::Normal ? fd.N : fd.B);
}

/// Rate d(Gamma-like ratio E)/ds_p where E = -k'(g - f)/(k^2 (1+f^2)^(3/2)).
double ratio_derivative(double k, double f, double g, double kp, double kpp)
{
    const double w = 1.0 + f * f;
    return -(g - f) * (kpp * k * w - 3.0 * kp * kp * (1.0 + f * g)) / (k * k * k * w * w * std::sqrt(w));
}

double relative_gap(double a, double b, double floor)
{
    return std::fabs(a - b) / std::max(std::fabs(b), floor);
}

std::vector<double> node_grid(const BertrandPairModel& pair, int n)
{
    if (n < 16) fail(ErrorKind::TooFewSamples, "indicatrix grids need n >= 16");
    if (pair.grid.empty()) fail(ErrorKind::InvalidArgument, "pair has no grid");
    return uniform_grid({pair.grid.front(), pair.grid.back()}, n);
}

/// Arc length of a sampled curve. The stencil switches at node midpoints,
/// so each half-interval is a smooth piece.
double piecewise_arc_length(const Curve& c)
{
    using G = boost::math::quadrature::gauss<double, 10>;
    const auto& t = c.params();
    std::vector<double> part(t.size() - 1, 0.0);
    parallel_for(part.size(), [&](std::size_t i) {
        const double m = 0.5 * (t[i] + t[i + 1]);
        auto f = [&](double x) { return speed_at(c, x); };
        part[i] = G::integrate(f, t[i], m) + G::integrate(f, m, t[i + 1]);
    });
    double s = 0.0;
    for (double v : part) s += v;
    return s;
}

} // namespace

std::string kind_name(IndicatrixKind k)
{
    const char* a = k.axis == Axis::Tangent ? "t" : (k.axis == Axis::Normal ? "n" : "b");
    return std::string(a) + (k.side == Side::Base ? "-base" : "-mate");
}

IndicatrixKind parse_kind(const std::string& s)
{
    for (const auto& k : all_indicatrix_kinds())
        if (kind_name(k) == s) return k;
    fail(ErrorKind::InvalidArgument, "unknown indicatrix kind '" + s + "' (expected {t,n,b}-{base,mate})");
}

std::array<IndicatrixKind, 6> all_indicatrix_kinds()
{
    return {IndicatrixKind{Side::Base, Axis::Tangent}, {Side::Base, Axis::Normal}, {Side::Base, Axis::Binormal},
            {Side::Mate, Axis::Tangent},               {Side::Mate, Axis::Normal}, {Side::Mate, Axis::Binormal}};
}

namespace {

template <class FrameAt>
IndicatrixCurve sample_indicatrix(Domain d, int n, const std::string& label, FrameAt&& frame_at)
{
    if (n < 16) fail(ErrorKind::TooFewSamples, "indicatrix curves need n >= 16");
    const std::vector<double> grid = uniform_grid(d, n);
    auto sw = sweep<Vec3>(grid.size(), [&](std::size_t i) { return frame_at(grid[i]); });
    IndicatrixCurve out;
    out.masked = masked_intervals(grid, sw.reasons);
    std::vector<double> t;
    std::vector<Vec3> p;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!sw.values[i]) continue;
        t.push_back(grid[i]);
        p.push_back(*sw.values[i]);
        out.max_norm_deviation = std::max(out.max_norm_deviation, std::fabs(norm(p.back()) - 1.0));
    }
    if (t.size() < 7) fail(ErrorKind::Singular, "too few regular nodes for an indicatrix curve");
    out.curve = Curve::sampled(std::move(t), std::move(p), label);
    return out;
}

} // namespace

IndicatrixCurve indicatrix_curve(const Curve& c, Axis axis, int n)
{
    const char* suffix = axis == Axis::Tangent ? "-t" : (axis == Axis::Normal ? "-n" : "-b");
    return sample_indicatrix(c.domain(), n, c.label() + suffix,
                             [&](double t) { return axis_vector(frenet_apparatus(c, t), axis); });
}

IndicatrixCurve indicatrix_curve(const BertrandPairModel& pair, IndicatrixKind kind, int n)
{
    const Domain d{pair.grid.front(), pair.grid.back()};
    const Curve& c = kind.side == Side::Base ? pair.base : pair.mate;
    return sample_indicatrix(d, n, c.label() + "-" + kind_name(kind).substr(0, 1), [&](double t) {
        if (kind.side == Side::Base) return axis_vector(frenet_apparatus(pair.base, t), kind.axis);
        const FrenetData b = frenet_apparatus(pair.base, t);
        const FrenetData m = frenet_apparatus(pair.mate, t);
        return axis_vector(mate_natural(m, b), kind.axis);
    });
}

IndicatrixSample indicatrix_sample(const PairSample& s, int eps, IndicatrixKind kind)
{
    const FrenetData& p = partner(s, kind.side);
    const RatioInvariants& rp = partner_ri(s, kind.side);
    require_ratios(rp);
    const double k = p.kappa, f = rp.f, g = rp.g, kp = p.dkappa_ds, kpp = p.d2kappa_ds2;
    const double w = 1.0 + f * f;
    const double sw = std::sqrt(w);
    const double sg = std::sqrt(1.0 + g * g);
    const double rho = std::sqrt(kp * kp * (g - f) * (g - f) + k * k * k * k * w * w * w);
    const double dE = ratio_derivative(k, f, g, kp, kpp);
    const double e = eps;

    IndicatrixSample r;
    r.t = s.t;
    r.kind = kind;
    r.X = axis_vector(side_curve(s, kind.side), kind.axis);
    r.rho = kNaN;
    r.Gamma = kNaN;
    r.kappa_printed = r.tau_printed = r.Gamma_printed = kNaN;

    // Printed geodesic indicator: base side carries a leading minus, mate
    // side does not; both multiply by d(partner)/d(indicatrix).
    auto printed_gamma = [&](double ds_dsp) {
        const double lead = kind.side == Side::Base ? -1.0 : 1.0;
        const double bracket = kpp * k * w - 3.0 * kp * kp * (1.0 + f * g);
        return lead * k * k * k * w * sw * (g - f) * (g - f) * bracket / (sg * rho * rho * rho) / ds_dsp;
    };

    switch (kind.axis) {
    case Axis::Tangent: {
        const double h = 1.0 + f * g;
        r.T = -p.N;
        r.N = (1.0 / sw) * (p.T - f * p.B);
        r.B = (1.0 / sw) * (f * p.T + p.B);
        r.kappa = sw * sg / std::fabs(h);
        r.tau = -kp * (g - f) * sg / (k * k * w * h);
        r.ds_dsp = -e * k * h / sg;
        const double q = r.tau / r.kappa;
        r.Gamma = sgn(h) * dE / (r.ds_dsp * r.kappa * std::pow(1.0 + q * q, 1.5));
        r.kappa_printed = sw * sg / (f - g);
        r.tau_printed = (kind.side == Side::Base ? -1.0 : 1.0) * kp * sg / (k * k * w);
        r.Gamma_printed = printed_gamma(r.ds_dsp);
        break;
    }
    case Axis::Normal: {
        const double a = kp * (g - f);
        r.T = (-e / sw) * (p.T - f * p.B);
        r.N = (e / (rho * sw)) * (f * a * p.T - k * k * w * w * p.N + a * p.B);
        r.B = (1.0 / rho) * (k * k * f * w * p.T + a * p.N + k * k * w * p.B);
        r.kappa = rho / (k * k * w * sw);
        r.tau = -e * (g - f) / (rho * rho) * ((3.0 * kp * kp - k * kpp) * w + 3.0 * f * kp * kp * (g - f));
        r.ds_dsp = k * sw;
        r.rho = rho;
        r.kappa_printed = r.kappa;
        r.tau_printed = r.tau;
        break;
    }
    case Axis::Binormal: {
        r.T = e * p.N;
        r.N = (-e / sw) * (p.T - f * p.B);
        r.B = (1.0 / sw) * (f * p.T + p.B);
        r.kappa = sw * sg / (f - g);
        r.tau = -e * kp * sg / (k * k * w);
        r.ds_dsp = k * (f - g) / sg;
        const double q = r.tau / r.kappa;
        r.Gamma = -e * dE / (r.ds_dsp * r.kappa * std::pow(1.0 + q * q, 1.5));
        r.kappa_printed = r.kappa;
        r.tau_printed = r.tau;
        r.Gamma_printed = printed_gamma(r.ds_dsp);
        break;
    }
    }
    r.ds_dt = r.ds_dsp * partner_rate(s, kind.side);
    return r;
}

IndicatrixSample indicatrix_sample(const BertrandPairModel& pair, IndicatrixKind kind, double t)
{
    return indicatrix_sample(pair_sample(pair, t), pair.epsilon, kind);
}

FrenetData indicatrix_jet_apparatus(const BertrandPairModel& pair, IndicatrixKind kind, double t)
{
    // Frame jets sit one order below the velocity; the indicatrix needs
    // order 4 for its own torsion derivative.
    constexpr int kVelocityOrder = 5;
    FrameJets fj = frame_jets_from_velocity(pair.base.derivative_jets(t, kVelocityOrder));
    if (kind.side == Side::Mate) {
        const FrenetData b = frenet_apparatus(pair.base, t);
        const FrenetData m = frenet_apparatus(pair.mate, t);
        const double sigma = natural_mate_orientation(b, m);
        fj = frame_jets_from_velocity(pair.mate.derivative_jets(t, kVelocityOrder));
        fj.T = sigma * fj.T;
        fj.B = sigma * fj.B;
    }
    const JetVec3& x = kind.axis == Axis::Tangent ? fj.T : (kind.axis == Axis::Normal ? fj.N : fj.B);
    return frenet_from_jets(x, t);
}

IndicatrixApparatus indicatrix_apparatus(const BertrandPairModel& pair, IndicatrixKind kind, int n)
{
    IndicatrixApparatus a;
    a.kind = kind;
    a.t = node_grid(pair, n);
    auto sw = sweep<IndicatrixSample>(a.t.size(), [&](std::size_t i) {
        return indicatrix_sample(pair, kind, a.t[i]);
    });
    a.samples = std::move(sw.values);
    a.masked = masked_intervals(a.t, sw.reasons);

    // Cumulative arc length from the closed-form rate, 7-point Gauss per
    // segment; segments touching a failure contribute nothing.
    using G = boost::math::quadrature::gauss<double, 7>;
    std::vector<double> inc(a.t.size() - 1, 0.0);
    std::vector<char> bad(inc.size(), 0);
    parallel_for(inc.size(), [&](std::size_t i) {
        try {
            inc[i] = G::integrate(
                [&](double x) { return std::fabs(indicatrix_sample(pair, kind, x).ds_dt); }, a.t[i], a.t[i + 1]);
        } catch (const Error&) {
            bad[i] = 1;
        }
    });
    a.s.assign(a.t.size(), 0.0);
    bool monotone = a.masked.empty();
    for (std::size_t i = 0; i < inc.size(); ++i) {
        a.s[i + 1] = a.s[i] + inc[i];
        if (bad[i] || !(inc[i] > 0.0)) monotone = false;
    }
    if (monotone) {
        std::vector<double> rate(a.t.size());
        for (std::size_t i = 0; i < rate.size(); ++i) rate[i] = std::fabs(a.samples[i]->ds_dt);
        a.s_table.emplace(a.t, a.s, std::move(rate));
    }
    return a;
}

DirectComparison compare_with_direct(const BertrandPairModel& pair, IndicatrixKind kind, int n)
{
    DirectComparison c;
    c.kind = kind;
    c.n = n;
    c.t = node_grid(pair, n);
    const IndicatrixCurve ic = indicatrix_curve(pair, kind, n);
    const std::size_t m = c.t.size();
    c.kappa_closed.assign(m, kNaN);
    c.tau_closed.assign(m, kNaN);
    c.Gamma_closed.assign(m, kNaN);
    c.kappa_direct.assign(m, kNaN);
    c.tau_direct.assign(m, kNaN);
    c.Gamma_direct.assign(m, kNaN);
    c.gap_kappa.assign(m, kNaN);
    c.gap_tau.assign(m, kNaN);
    c.norm_deviation.assign(m, kNaN);

    struct Row {
        IndicatrixSample cs;
        FrenetData direct;
        FrenetData jet;
    };
    auto sw = sweep<Row>(m, [&](std::size_t i) {
        const double t = c.t[i];
        return Row{indicatrix_sample(pair, kind, t), frenet_apparatus(ic.curve, t),
                   indicatrix_jet_apparatus(pair, kind, t)};
    });
    c.masked = masked_intervals(c.t, sw.reasons);

    for (std::size_t i = 0; i < m; ++i) {
        if (!sw.values[i]) continue;
        const Row& r = *sw.values[i];
        const double o = r.cs.orientation();
        c.kappa_closed[i] = r.cs.kappa;
        c.tau_closed[i] = r.cs.tau;
        c.Gamma_closed[i] = r.cs.Gamma;
        c.kappa_direct[i] = r.direct.kappa;
        c.tau_direct[i] = r.direct.tau;
        c.Gamma_direct[i] = o * slant_geodesic_indicator(r.direct);
        c.gap_kappa[i] = relative_gap(std::fabs(r.cs.kappa), r.direct.kappa, 0.0);
        c.gap_tau[i] = relative_gap(r.cs.tau, r.direct.tau, r.direct.kappa);
        c.norm_deviation[i] = std::fabs(norm(r.cs.X) - 1.0);
        c.max_gap_kappa = std::max(c.max_gap_kappa, c.gap_kappa[i]);
        c.max_gap_tau = std::max(c.max_gap_tau, c.gap_tau[i]);
        c.max_norm_deviation = std::max(c.max_norm_deviation, c.norm_deviation[i]);
        c.max_gap_kappa_jet = std::max(c.max_gap_kappa_jet, relative_gap(std::fabs(r.cs.kappa), r.jet.kappa, 0.0));
        c.max_gap_tau_jet = std::max(c.max_gap_tau_jet, relative_gap(r.cs.tau, r.jet.tau, r.jet.kappa));
        if (std::isfinite(r.cs.Gamma)) {
            const double gj = o * slant_geodesic_indicator(r.jet);
            c.max_gap_Gamma_jet = std::max(c.max_gap_Gamma_jet, relative_gap(r.cs.Gamma, gj, 1.0));
        }
        c.max_gap_printed_kappa =
            std::max(c.max_gap_printed_kappa, relative_gap(r.cs.kappa_printed, r.jet.kappa, 0.0));
        c.max_gap_printed_tau =
            std::max(c.max_gap_printed_tau, relative_gap(r.cs.tau_printed, r.jet.tau, r.jet.kappa));
    }
    return c;
}

FrameRelationsReport frame_relations_check(const BertrandPairModel& pair, int n)
{
    FrameRelationsReport rep;
    rep.epsilon = pair.epsilon;
    const std::vector<double> grid = node_grid(pair, n);
    const auto kinds = all_indicatrix_kinds();

    struct Frames {
        std::array<IndicatrixSample, 6> closed;
        std::array<std::array<Vec3, 3>, 6> jet;
    };
    auto sw = sweep<Frames>(grid.size(), [&](std::size_t i) {
        const PairSample ps = pair_sample(pair, grid[i]);
        Frames fr;
        for (std::size_t k = 0; k < 6; ++k) {
            fr.closed[k] = indicatrix_sample(ps, pair.epsilon, kinds[k]);
            const FrenetData j = indicatrix_jet_apparatus(pair, kinds[k], grid[i]);
            // Align with the closed-form conventions: arc length orientation
            // and, for a signed curvature, the normal direction.
            const double o = fr.closed[k].orientation();
            const double sk = sgn(fr.closed[k].kappa);
            fr.jet[k] = {o * j.T, sk * j.N, o * sk * j.B};
        }
        return fr;
    });
    rep.masked = masked_intervals(grid, sw.reasons);
    rep.masked_fraction = sw.masked_fraction();

    const double e = pair.epsilon;
    // Frame index: 0 T, 1 N, 2 B; kinds: 0 t, 1 n, 2 b (base), 3..5 mate.
    struct Rel {
        const char* id;
        int ka, fa;
        double sign;
        int kb, fb;
    };
    const Rel rels[] = {
        {"T_t = -eps T_b", 0, 0, -e, 2, 0},   {"T_n = -eps N_t", 1, 0, -e, 0, 1},
        {"T_n = N_b", 1, 0, 1.0, 2, 1},        {"B_t = B_b", 0, 2, 1.0, 2, 2},
        {"T~_t = -eps T~_b", 3, 0, -e, 5, 0}, {"N~_t = -eps T~_n", 3, 1, -e, 4, 0},
        {"N~_t = -eps N~_b", 3, 1, -e, 5, 1}, {"B~_t = B~_b", 3, 2, 1.0, 5, 2},
    };
    for (const Rel& r : rels) {
        FrameRelation fr;
        fr.id = r.id;
        for (const auto& v : sw.values) {
            if (!v) continue;
            auto pick = [&](const IndicatrixSample& s, int f) { return f == 0 ? s.T : (f == 1 ? s.N : s.B); };
            const Vec3 a = pick(v->closed[r.ka], r.fa);
            const Vec3 b = pick(v->closed[r.kb], r.fb);
            fr.max_deviation = std::max(fr.max_deviation, norm(a - r.sign * b));
            const Vec3 ja = v->jet[r.ka][r.fa];
            const Vec3 jb = v->jet[r.kb][r.fb];
            fr.max_deviation_jet = std::max(fr.max_deviation_jet, norm(ja - r.sign * jb));
        }
        rep.relations.push_back(fr);
    }
    return rep;
}

AffineFit affine_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) fail(ErrorKind::InvalidArgument, "affine fit needs >= 2 paired values");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) fail(ErrorKind::IllConditioned, "affine fit abscissae are constant");
    AffineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss += r * r;
    }
    f.rms_residual = std::sqrt(ss / n);
    return f;
}

ArclengthRelations indicatrix_arclength_relations(const BertrandPairModel& pair, int n)
{
    ArclengthRelations out;
    out.n = n;
    out.epsilon = pair.epsilon;
    out.lambda = pair.lambda;
    out.t = node_grid(pair, n);
    const std::size_t m = out.t.size();
    const auto kinds = all_indicatrix_kinds();
    const double e = pair.epsilon;

    // Integrands per dt, in this order: s, s*, six indicatrix rates, the
    // three candidate s_t integrands, total torsion.
    constexpr int kCols = 12;
    using Row = std::array<double, kCols>;
    auto integrand = [&](double t) {
        const PairSample ps = pair_sample(pair, t);
        Row r{};
        r[0] = ps.base.speed;
        r[1] = ps.sigma * ps.mate_t.speed;
        for (std::size_t k = 0; k < 6; ++k) r[2 + k] = indicatrix_sample(ps, pair.epsilon, kinds[k]).ds_dt;
        const double kt = ps.mate.kappa, ft = ps.ri_tilde.f, gt = ps.ri_tilde.g;
        const double d = (gt - ft) * (gt - ft);
        r[8] = -kt * d / (ft * (1.0 + gt) * (1.0 + gt)) * ps.base.speed;
        r[9] = -kt * d / (ft * (1.0 + gt * gt)) * ps.base.speed;
        r[10] = -e * kt * (1.0 + ft * gt) / std::sqrt(1.0 + gt * gt) * r[1];
        r[11] = ps.base.tau * ps.base.speed;
        return r;
    };

    using G = boost::math::quadrature::gauss<double, 7>;
    std::vector<Row> inc(m - 1);
    std::vector<std::string> reasons(m, "");
    parallel_for(m - 1, [&](std::size_t i) {
        Row acc{};
        try {
            const double a = out.t[i], b = out.t[i + 1];
            const double h = 0.5 * (b - a), c = 0.5 * (a + b);
            const auto& x = G::abscissa();
            const auto& w = G::weights();
            auto add = [&](double xi, double wi) {
                const Row r = integrand(c + h * xi);
                for (int k = 0; k < kCols; ++k) acc[k] += h * wi * r[k];
            };
            add(0.0, w[0]);
            for (std::size_t j = 1; j < x.size(); ++j) {
                add(x[j], w[j]);
                add(-x[j], w[j]);
            }
        } catch (const Error& err) {
            acc.fill(0.0);
            reasons[i] = error_kind_name(err.kind());
        }
        inc[i] = acc;
    });
    out.masked = masked_intervals(out.t, reasons);

    std::vector<std::vector<double>> col(kCols, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (int k = 0; k < kCols; ++k) col[k][i + 1] = col[k][i] + inc[i][k];
    out.s_base = col[0];
    out.s_mate = col[1];
    out.s_t = col[2];
    out.s_n = col[3];
    out.s_b = col[4];
    out.s_t_mate = col[5];
    out.s_n_mate = col[6];
    out.s_b_mate = col[7];
    out.total_torsion = col[11].back();

    // Fits use nodes whose neighbouring segments are all unmasked.
    std::vector<double> xs, ys, xm, ym;
    for (std::size_t i = 0; i < m; ++i) {
        const bool left = i == 0 || reasons[i - 1].empty();
        const bool right = i + 1 == m || reasons[i].empty();
        if (!left || !right) continue;
        xs.push_back(out.s_mate[i]);
        ys.push_back(out.s_b[i]);
        xm.push_back(out.s_base[i]);
        ym.push_back(out.s_b_mate[i]);
    }
    out.fit_b = affine_fit(xs, ys);
    out.fit_b_mate = affine_fit(xm, ym);
    auto range = [](const std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        return *hi - *lo;
    };
    out.range_b = range(ys);
    out.range_b_mate = range(ym);

    // c1 = g~ / sqrt(1 + g~^2), read off the constancy of tau~' / (kappa~' sqrt(1 + g~^2)).
    auto c1s = sweep<double>(m, [&](std::size_t i) {
        const PairSample ps = pair_sample(pair, out.t[i]);
        require_ratios(ps.ri_tilde);
        return ps.mate.dtau_ds / (ps.mate.dkappa_ds * std::sqrt(1.0 + ps.ri_tilde.g * ps.ri_tilde.g));
    });
    std::vector<double> c1v;
    for (const auto& v : c1s.values)
        if (v) c1v.push_back(*v);
    out.c1_stat = constancy(c1v);
    out.c1 = out.c1_stat.mean;
    out.predicted_slope_b = -e * out.c1 / pair.lambda;
    out.predicted_slope_b_mate = out.c1 / pair.lambda;

    // Tangent indicatrix arc length: the oracle is the sampled indicatrix.
    const IndicatrixCurve tc = indicatrix_curve(pair, {Side::Base, Axis::Tangent}, n);
    const double direct_t = piecewise_arc_length(tc.curve);
    const char* names[] = {"printed (1+g~)^2", "sum of squares (1+g~^2)", "frenet"};
    for (int k = 0; k < 3; ++k) {
        ArcCandidate cand;
        cand.name = names[k];
        cand.total = col[8 + k].back();
        cand.gap = std::fabs(std::fabs(cand.total) - direct_t) / direct_t;
        out.s_t_candidates.push_back(cand);
    }
    // Smallest gap wins; the sum-of-squares form is the default on ties.
    std::size_t pick = 1;
    for (std::size_t k = 0; k < 3; ++k)
        if (out.s_t_candidates[k].gap < out.s_t_candidates[pick].gap * (1.0 - 1e-12)) pick = k;
    out.s_t_selected = out.s_t_candidates[pick].name;

    out.s_b_direct = piecewise_arc_length(indicatrix_curve(pair, {Side::Base, Axis::Binormal}, n).curve);
    out.s_b_mate_direct = piecewise_arc_length(indicatrix_curve(pair, {Side::Mate, Axis::Binormal}, n).curve);
    out.s_n_direct = piecewise_arc_length(indicatrix_curve(pair, {Side::Base, Axis::Normal}, n).curve);
    out.s_n_mate_integral = out.s_n.back();
    return out;
}

} // namespace bk
