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

#include "bertrand_kit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v)
        if (std::isfinite(x)) m = std::max(m, std::fabs(x));
    return m;
}

struct SphereFit {
    Vec3 center{};
    double radius = 0.0;
    double residual = kInf;
    bool degenerate = false;
};

// Linear least squares |q|^2 = 2 c.q + d on centred points; the minimum
// norm solution still fits exactly when the points are concyclic.
SphereFit fit_sphere(const std::vector<Vec3>& pts)
{
    SphereFit fit;
    if (pts.size() < 4) return fit;
    Vec3 mean{};
    for (const auto& p : pts) mean = mean + p;
    mean = (1.0 / static_cast<double>(pts.size())) * mean;
    const auto m = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd A(m, 4);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const Vec3 q = pts[static_cast<std::size_t>(i)] - mean;
        A(i, 0) = 2.0 * q[0];
        A(i, 1) = 2.0 * q[1];
        A(i, 2) = 2.0 * q[2];
        A(i, 3) = 1.0;
        b(i) = dot(q, q);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    fit.degenerate = sv(3) <= 1e-10 * sv(0);
    svd.setThreshold(1e-10);
    const Eigen::VectorXd x = svd.solve(b);
    const Vec3 c{x(0), x(1), x(2)};
    const double r2 = x(3) + dot(c, c);
    if (!(r2 > 0.0)) return fit;
    fit.center = c + mean;
    fit.radius = std::sqrt(r2);
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, std::fabs(distance(p, fit.center) - fit.radius));
    fit.residual = worst / fit.radius;
    return fit;
}

} // namespace

double ratio_deviation(const std::vector<double>& x)
{
    const ConstancyStat s = constancy(x);
    return s.samples == 0 ? kInf : s.max_dev / std::max(std::fabs(s.mean), 1.0);
}

CurveClass classify_curve(const Curve& c, int n, const ClassifyTolerances& tol)
{
    if (n < 64) fail(ErrorKind::TooFewSamples, "classification needs n >= 64");
    const std::vector<double> grid = uniform_grid(c.domain(), n);
    auto sw = sweep<FrenetData>(grid.size(), [&](std::size_t i) { return frenet_apparatus(c, grid[i]); });
    CurveClass out;
    out.masked = masked_intervals(grid, sw.reasons);
    out.masked_fraction = sw.masked_fraction();
    std::vector<double> tau, kappa, f, Gamma;
    for (const auto& v : sw.values) {
        if (!v) continue;
        tau.push_back(v->tau);
        kappa.push_back(v->kappa);
        f.push_back(v->tau / v->kappa);
        Gamma.push_back(slant_geodesic_indicator(*v));
    }
    if (kappa.empty()) fail(ErrorKind::Singular, "no regular samples to classify");

    std::vector<Vec3> pts(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { pts[i] = c.point(grid[i]); });
    const SphereFit sph = fit_sphere(pts);

    auto& m = out.metrics;
    m.tau_max = max_abs(tau);
    m.kappa_max = max_abs(kappa);
    m.f_deviation = ratio_deviation(f);
    m.Gamma_deviation = ratio_deviation(Gamma);
    m.sphere_fit_residual = sph.residual;
    m.sphere_center = sph.center;
    m.sphere_radius = sph.radius;

    out.planar = m.tau_max < tol.planar * m.kappa_max;
    out.general_helix = m.f_deviation < tol.helix;
    out.slant_helix = m.Gamma_deviation < tol.slant;
    out.spherical = m.sphere_fit_residual < tol.sphere;
    out.sphere_fit_degenerate = sph.degenerate;
    return out;
}

SphericalHelixCheck spherical_helix_check(const std::vector<double>& kappa, const std::vector<double>& tau,
                                          double tol_helix)
{
    if (kappa.size() != tau.size()) fail(ErrorKind::InvalidArgument, "curvature and torsion lengths differ");
    std::vector<double> r;
    r.reserve(kappa.size());
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        if (!std::isfinite(kappa[i]) || !std::isfinite(tau[i])) continue;
        if (std::fabs(kappa[i]) <= kRegularityFloor)
            fail(ErrorKind::DegenerateRatio, "indicatrix curvature vanishes, tau/kappa undefined");
        r.push_back(tau[i] / kappa[i]);
    }
    if (r.empty()) fail(ErrorKind::DegenerateRatio, "no samples for the spherical helix check");
    SphericalHelixCheck out;
    out.mean_ratio = constancy(r).mean;
    out.deviation = ratio_deviation(r);
    out.is_spherical_helix = out.deviation < tol_helix;
    return out;
}

SphericalHelixCheck spherical_helix_check(const IndicatrixApparatus& app, double tol_helix)
{
    std::vector<double> k, t;
    for (const auto& s : app.samples) {
        if (!s) continue;
        k.push_back(s->kappa);
        t.push_back(s->tau);
    }
    return spherical_helix_check(k, t, tol_helix);
}

namespace {

ConditionResidual condition_residual(const FrenetData& fd, const RatioInvariants& ri, double raw)
{
    if (!std::isfinite(fd.d2kappa_ds2)) {
        Error err(ErrorKind::Singular, "second curvature derivative unavailable");
        err.where = fd.t;
        throw err;
    }
    const double k = fd.kappa, kp = fd.dkappa_ds, kpp = fd.d2kappa_ds2, f = ri.f, g = ri.g;
    const double scale = std::fabs(kpp * k * (1.0 + f * f)) + std::fabs(3.0 * kp * kp * (1.0 + f * g));
    return {raw, scale > 0.0 ? std::fabs(raw) / scale : 0.0};
}

} // namespace

ConditionResidual helix_condition_residual(const FrenetData& fd, const RatioInvariants& ri)
{
    require_ratios(ri);
    const double k = fd.kappa, kp = fd.dkappa_ds, kpp = fd.d2kappa_ds2, f = ri.f, g = ri.g;
    const double raw = kpp * k * f * f - 3.0 * kp * kp * g * f + kpp * k - 3.0 * kp * kp;
    return condition_residual(fd, ri, raw);
}

ConditionResidual planar_condition_residual(const FrenetData& fd, const RatioInvariants& ri)
{
    require_ratios(ri);
    const double k = fd.kappa, kp = fd.dkappa_ds, kpp = fd.d2kappa_ds2, f = ri.f, g = ri.g;
    const double raw = k * kpp * f * f - 3.0 * kp * kp * g * f - (3.0 * kp * kp - k * kpp);
    return condition_residual(fd, ri, raw);
}

std::string verdict_name(PairVerdict v)
{
    switch (v) {
    case PairVerdict::Bertrand: return "bertrand";
    case PairVerdict::Mannheim: return "mannheim";
    case PairVerdict::InvoluteEvolute: return "involute_evolute";
    case PairVerdict::None: break;
    }
    return "none";
}

PairClass pair_classify(const Curve& a, const Curve& b, int n, const PairClassifyOptions& opt)
{
    if (n < 16) fail(ErrorKind::TooFewSamples, "pair classification needs n >= 16");
    std::vector<double> ta, tb;
    if (opt.arclength_aligned) {
        const ArcLengthTable sa = build_arclength_table(a, std::max(16, n));
        const ArcLengthTable sb = build_arclength_table(b, std::max(16, n));
        for (double u : uniform_grid({0.0, 1.0}, n)) {
            ta.push_back(sa.t_of_s(u * sa.total()));
            tb.push_back(sb.t_of_s(u * sb.total()));
        }
    } else {
        const Domain da = a.domain(), db = b.domain();
        const Domain d{std::max(da.lo, db.lo), std::min(da.hi, db.hi)};
        if (!(d.lo < d.hi)) fail(ErrorKind::GridMismatch, "curves share no parameter interval");
        ta = uniform_grid(d, n);
        tb = ta;
    }

    struct Row {
        FrenetData fa, fb;
        Vec3 d;
    };
    auto sw = sweep<Row>(ta.size(), [&](std::size_t i) {
        return Row{frenet_apparatus(a, ta[i]), frenet_apparatus(b, tb[i]), b.point(tb[i]) - a.point(ta[i])};
    });
    PairClass out;
    out.arclength_aligned = opt.arclength_aligned;
    out.masked = masked_intervals(ta, sw.reasons);
    out.masked_fraction = sw.masked_fraction();

    std::vector<const Row*> rows;
    Vec3 lo{kInf, kInf, kInf}, hi{-kInf, -kInf, -kInf};
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (!sw.values[i]) continue;
        rows.push_back(&*sw.values[i]);
        for (const Vec3& p : {a.point(ta[i]), b.point(tb[i])})
            for (int k = 0; k < 3; ++k) {
                lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
                hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]);
            }
    }
    if (rows.empty()) fail(ErrorKind::Singular, "no regular samples to compare");
    const double scale = std::max(1.0, distance(lo, hi));

    enum Dir { DirT, DirN, DirB };
    auto dir = [](const FrenetData& f, Dir d) { return d == DirT ? f.T : (d == DirN ? f.N : f.B); };
    auto evaluate = [&](const char* name, Dir u, auto frame_test, bool constant_offset, const char* off_fail,
                        const char* frame_fail) {
        CategoryEvidence ev;
        ev.category = name;
        std::vector<double> proj;
        for (const Row* r : rows) {
            const Vec3 e = dir(r->fa, u);
            const double p = dot(r->d, e);
            proj.push_back(p);
            ev.offset_misalignment = std::max(ev.offset_misalignment, norm(r->d - p * e) / scale);
            ev.frame_misalignment = std::max(ev.frame_misalignment, frame_test(*r));
        }
        const ConstancyStat st = constancy(proj);
        ev.offset_mean = st.mean;
        ev.offset_variation = st.max_dev / (1.0 + std::fabs(st.mean));
        if (ev.offset_misalignment >= opt.tol_offset)
            ev.failed = off_fail;
        else if (ev.frame_misalignment >= opt.tol_align)
            ev.failed = frame_fail;
        else if (constant_offset && ev.offset_variation >= opt.tol_const)
            ev.failed = "offset-varies";
        ev.pass = ev.failed.empty();
        return ev;
    };
    out.evidence.push_back(evaluate(
        "bertrand", DirN, [](const Row& r) { return 1.0 - std::fabs(dot(r.fa.N, r.fb.N)); }, true,
        "offset-not-normal", "normals-not-aligned"));
    out.evidence.push_back(evaluate(
        "mannheim", DirB, [](const Row& r) { return 1.0 - std::fabs(dot(r.fb.N, r.fa.B)); }, true,
        "offset-not-binormal", "normal-not-binormal"));
    out.evidence.push_back(evaluate(
        "involute_evolute", DirT, [](const Row& r) { return std::fabs(dot(r.fa.T, r.fb.T)); }, false,
        "offset-not-tangent", "tangents-not-orthogonal"));

    const PairVerdict order[] = {PairVerdict::Bertrand, PairVerdict::Mannheim, PairVerdict::InvoluteEvolute};
    for (std::size_t i = 0; i < 3; ++i)
        if (out.evidence[i].pass) {
            out.verdict = order[i];
            break;
        }
    return out;
}

std::string entry_kind_name(EntryKind k)
{
    switch (k) {
    case EntryKind::Identity: return "identity";
    case EntryKind::Equivalence: return "equivalence";
    case EntryKind::Condition: return "condition";
    case EntryKind::Classification: break;
    }
    return "classification";
}

bool TheoremReport::identities_pass() const
{
    for (const auto& e : entries)
        if (e.kind == EntryKind::Identity && !e.pass) return false;
    return true;
}

const TheoremEntry* TheoremReport::find(const std::string& id) const
{
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<std::string> theorem_ids()
{
    return {"th2",   "th3",  "th6",  "th8",  "th11", "elf-corollaries", "cr14",           "teo15",           "th17",
            "cr18",  "th22", "th25", "teo33", "constraint-eq", "eps-g-relation", "frame-relations", "negative-result"};
}

std::map<std::string, double> default_theorem_tolerances()
{
    return {{"th2", 1e-5},   {"th3", 1e-6},   {"th6", 0.5},   {"th8", 1e-3},  {"th11", 1e-3},
            {"elf-corollaries", 1e-5},        {"cr14", 1e-5}, {"teo15", 0.5}, {"th17", 1e-3},
            {"cr18", 0.5},   {"th22", 1e-6},  {"th25", 0.5},  {"teo33", 0.5}, {"constraint-eq", 1e-6},
            {"eps-g-relation", 1e-8},         {"frame-relations", 1e-8},      {"negative-result", 0.5}};
}

namespace {

/// A boolean decided by metric < threshold, with the distance from the
/// threshold kept for the hysteresis band.
struct Flag {
    std::string name;
    double metric = 0.0;
    double threshold = 0.0;
    bool value() const { return metric < threshold; }
    bool clear() const { return metric > 10.0 * threshold || metric < 0.1 * threshold; }
};

double max_rel(const std::vector<double>& a, const std::vector<double>& b, double scale)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::isfinite(a[i]) && std::isfinite(b[i])) m = std::max(m, std::fabs(a[i] - b[i]));
    return scale > 0.0 ? m / scale : m;
}

} // namespace

TheoremReport theorem_suite(const BertrandPairModel& pair, int n, const std::map<std::string, double>& overrides,
                            const ClassifyTolerances& ctol)
{
    if (n < 256) fail(ErrorKind::TooFewSamples, "theorem suite needs n >= 256");
    auto tols = default_theorem_tolerances();
    for (const auto& [id, v] : overrides) {
        if (!tols.count(id)) fail(ErrorKind::InvalidArgument, "unknown theorem id '" + id + "'");
        tols[id] = v;
    }

    TheoremReport rep;
    rep.epsilon = pair.epsilon;
    rep.lambda = pair.lambda;
    rep.n = n;
    const std::vector<double> grid = uniform_grid({pair.grid.front(), pair.grid.back()}, n);
    const auto kinds = all_indicatrix_kinds();

    struct Node {
        PairSample ps;
        std::array<IndicatrixSample, 6> ind;
        ConditionResidual th8, th11;
        ConstraintValue constraint;
    };
    auto sw = sweep<Node>(grid.size(), [&](std::size_t i) {
        Node nd;
        nd.ps = pair_sample(pair, grid[i]);
        for (std::size_t k = 0; k < 6; ++k) nd.ind[k] = indicatrix_sample(nd.ps, pair.epsilon, kinds[k]);
        nd.th8 = helix_condition_residual(nd.ps.mate, nd.ps.ri_tilde);
        nd.th11 = planar_condition_residual(nd.ps.mate, nd.ps.ri_tilde);
        nd.constraint = pair_constraint_residual(nd.ps, pair.epsilon);
        return nd;
    });
    const double masked = sw.masked_fraction();

    std::vector<double> G, Gt, g, gt, epsg, cons, c8, c11;
    std::array<std::vector<double>, 6> kap, tau, gam;
    for (const auto& v : sw.values) {
        if (!v) continue;
        G.push_back(v->ps.ri.Gamma);
        Gt.push_back(v->ps.ri_tilde.Gamma);
        g.push_back(v->ps.ri.g);
        gt.push_back(v->ps.ri_tilde.g);
        epsg.push_back(std::fabs(pair.epsilon * v->ps.ri.g + v->ps.ri_tilde.g) / std::max(1.0, std::fabs(v->ps.ri.g)));
        cons.push_back(v->constraint.normalized);
        c8.push_back(v->th8.normalized);
        c11.push_back(v->th11.normalized);
        for (std::size_t k = 0; k < 6; ++k) {
            kap[k].push_back(v->ind[k].kappa);
            tau[k].push_back(v->ind[k].tau);
            gam[k].push_back(v->ind[k].Gamma);
        }
    }
    if (G.empty()) fail(ErrorKind::Singular, "every grid point of the pair is masked");

    auto add = [&](std::string id, EntryKind kind, double residual) -> TheoremEntry& {
        TheoremEntry e;
        e.id = std::move(id);
        e.kind = kind;
        e.max_residual = residual;
        e.tolerance = tols.at(e.id);
        e.pass = residual < e.tolerance;
        e.masked_fraction = masked;
        rep.entries.push_back(std::move(e));
        return rep.entries.back();
    };
    auto ratio = [](const std::vector<double>& t, const std::vector<double>& k) {
        std::vector<double> r(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[i] / k[i];
        return r;
    };
    const double gmax = max_abs(G);

    // Flags for the equivalence entries.
    const Flag base_slant{"base slant helix", ratio_deviation(G), ctol.slant};
    const Flag mate_slant{"mate slant helix", ratio_deviation(Gt), ctol.slant};
    auto sph = [&](std::size_t k) {
        return Flag{kind_name(kinds[k]) + " spherical helix", ratio_deviation(ratio(tau[k], kap[k])), ctol.helix};
    };
    const Flag t_base = sph(0), b_base = sph(2), t_mate = sph(3), b_mate = sph(5);
    const Flag n_planar{"n-base planar", max_abs(tau[1]) / max_abs(kap[1]), ctol.planar};

    auto equivalence = [&](const std::string& id, const std::vector<Flag>& flags, const std::string& note) {
        int disagreements = 0;
        for (std::size_t i = 0; i < flags.size(); ++i)
            for (std::size_t j = i + 1; j < flags.size(); ++j)
                if (flags[i].clear() && flags[j].clear() && flags[i].value() != flags[j].value()) ++disagreements;
        TheoremEntry& e = add(id, EntryKind::Equivalence, disagreements);
        for (const auto& f : flags) {
            e.flag_names.push_back(f.name);
            e.flags.push_back(f.value());
            e.details.emplace_back(f.name + " metric", f.metric);
        }
        e.note = note;
    };
    auto condition = [&](const std::string& id, const std::vector<double>& res, const Flag& partner,
                         const std::string& note) {
        TheoremEntry& e = add(id, EntryKind::Condition, max_abs(res));
        e.flag_names = {"condition holds", partner.name};
        e.flags = {e.pass, partner.value()};
        e.details.emplace_back("consistent", e.pass == partner.value() ? 1.0 : 0.0);
        e.note = note;
    };

    {
        std::vector<double> sum(G.size());
        for (std::size_t i = 0; i < G.size(); ++i) sum[i] = G[i] + Gt[i];
        TheoremEntry& e = add("th2", EntryKind::Identity, max_abs(sum) / gmax);
        e.flag_names = {base_slant.name, mate_slant.name};
        e.flags = {base_slant.value(), mate_slant.value()};
        e.note = "Gamma + Gamma~ = 0, so either curve is a slant helix exactly when the other is";
    }
    add("th3", EntryKind::Identity, ratio_deviation(gt)).note = "g~ constant along the pair";
    equivalence("th6", {base_slant, mate_slant, t_base}, "slant helix iff the base tangent indicatrix is a spherical helix");
    condition("th8", c8, t_base, "shared polynomial with th11 and th17");
    condition("th11", c11, n_planar, "printed arrangement of the th8 polynomial");

    {
        const double r1 = max_rel(ratio(tau[0], kap[0]), G, gmax);
        const double r2 = max_rel(ratio(tau[2], kap[2]), G, gmax);
        const double r3 = max_rel(gam[0], gam[2], max_abs(gam[0]));
        const double r4 = max_rel(gam[3], gam[5], max_abs(gam[3]));
        TheoremEntry& e = add("elf-corollaries", EntryKind::Identity, std::max({r1, r2, r3, r4}));
        e.details = {{"tau_t/kappa_t vs Gamma", r1},
                     {"tau_b/kappa_b vs Gamma", r2},
                     {"Gamma_t vs Gamma_b", r3},
                     {"Gamma~_t vs Gamma~_b", r4}};
        std::vector<double> abs_kb(kap[2].size());
        for (std::size_t i = 0; i < abs_kb.size(); ++i) abs_kb[i] = std::fabs(kap[2][i]);
        e.details.emplace_back("kappa_t vs |kappa_b| (informational)", max_rel(kap[0], abs_kb, max_abs(kap[0])));
        e.note = "ratio chain and equal geodesic indicators of the tangent and binormal indicatrices";
    }

    {
        const ArclengthRelations ar = indicatrix_arclength_relations(pair, n);
        const double gb = std::fabs(std::fabs(ar.s_b.back()) - ar.s_b_direct) / ar.s_b_direct;
        const double gbm = std::fabs(std::fabs(ar.s_b_mate.back()) - ar.s_b_mate_direct) / ar.s_b_mate_direct;
        const double rb = ar.fit_b.rms_residual / ar.range_b;
        const double rbm = ar.fit_b_mate.rms_residual / ar.range_b_mate;
        TheoremEntry& e = add("cr14", EntryKind::Identity, std::max({gb, gbm, rb, rbm}));
        e.details = {{"s_b vs binormal indicatrix arc length", gb},
                     {"s*_b vs mate binormal indicatrix arc length", gbm},
                     {"affine rms / range (s_b vs s*)", rb},
                     {"affine rms / range (s*_b vs s)", rbm},
                     {"slope s_b vs s*", ar.fit_b.slope},
                     {"-eps c1 / lambda", ar.predicted_slope_b},
                     {"slope s*_b vs s", ar.fit_b_mate.slope},
                     {"c1 / lambda", ar.predicted_slope_b_mate},
                     {"c1 relative deviation", ar.c1_stat.relative()},
                     {"s_b total", ar.s_b.back()},
                     {"total torsion", ar.total_torsion}};
        e.note = "integrals against s* match the indicatrix arc lengths; slopes are reported with their signs";
    }

    equivalence("teo15", {mate_slant, b_base}, "mate slant helix iff the base binormal indicatrix is a spherical helix");
    condition("th17", c8, b_base, "same polynomial as th8");
    equivalence("cr18", {t_base, n_planar, b_base}, "three indicatrix properties of the base agree");
    add("th22", EntryKind::Identity, ratio_deviation(g)).note = "g constant along the pair";
    equivalence("th25", {mate_slant, base_slant, t_mate, t_base}, "mate-side restatement of th6");
    equivalence("teo33", {base_slant, b_mate}, "base slant helix iff the mate binormal indicatrix is a spherical helix");
    add("constraint-eq", EntryKind::Identity, max_abs(cons)).note = "(k~ + eps k) g g~ - eps f g~ k - f~ g k~ = 0";
    add("eps-g-relation", EntryKind::Identity, max_abs(epsg)).note = "eps g + g~ = 0";

    {
        const FrameRelationsReport fr = frame_relations_check(pair, n);
        double worst = 0.0;
        TheoremEntry tmp;
        for (const auto& r : fr.relations) {
            worst = std::max({worst, r.max_deviation, r.max_deviation_jet});
            tmp.details.emplace_back(r.id, std::max(r.max_deviation, r.max_deviation_jet));
        }
        TheoremEntry& e = add("frame-relations", EntryKind::Identity, worst);
        e.details = std::move(tmp.details);
        e.note = "closed-form frames and frames from exact jets";
    }

    {
        // Indicatrix pairs compared by arc-length fraction; none should
        // classify. The pair itself must classify as Bertrand.
        const int m = std::min(n, 512);
        std::array<Curve, 6> ic;
        for (std::size_t k = 0; k < 6; ++k) ic[k] = indicatrix_curve(pair, kinds[k], m).curve;
        const std::pair<int, int> tests[] = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
        PairClassifyOptions opt;
        opt.arclength_aligned = true;
        int hits = 0;
        TheoremEntry tmp;
        for (const auto& [i, j] : tests) {
            const PairClass pc = pair_classify(ic[static_cast<std::size_t>(i)], ic[static_cast<std::size_t>(j)], m, opt);
            if (pc.verdict != PairVerdict::None) ++hits;
            tmp.details.emplace_back(kind_name(kinds[static_cast<std::size_t>(i)]) + " / " +
                                         kind_name(kinds[static_cast<std::size_t>(j)]) + " classified",
                                     pc.verdict == PairVerdict::None ? 0.0 : 1.0);
        }
        const PairClass own = pair_classify(pair.base, pair.mate, m);
        const bool own_ok = own.verdict == PairVerdict::Bertrand;
        tmp.details.emplace_back("base / mate is bertrand", own_ok ? 1.0 : 0.0);
        TheoremEntry& e = add("negative-result", EntryKind::Classification, hits + (own_ok ? 0 : 1));
        e.details = std::move(tmp.details);
        e.note = "indicatrix pairs are neither Bertrand, Mannheim nor involute pairs";
    }

    // Report in the fixed id order.
    const auto ids = theorem_ids();
    std::stable_sort(rep.entries.begin(), rep.entries.end(), [&](const TheoremEntry& a, const TheoremEntry& b) {
        return std::find(ids.begin(), ids.end(), a.id) < std::find(ids.begin(), ids.end(), b.id);
    });
    return rep;
}

} // namespace bk
