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
#include <filesystem>
#include <limits>
#include <numbers>

#include "bertrand_kit/classify.hpp"
#include "bertrand_kit/commands.hpp"
#include "bertrand_kit/io.hpp"

namespace bk {

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Syntax:
    case ErrorKind::UnknownFunction:
    case ErrorKind::NonConstantExponent:
    case ErrorKind::Format:
    case ErrorKind::Io:
    case ErrorKind::InvalidArgument:
    case ErrorKind::TooFewSamples:
        return 2;
    case ErrorKind::Domain:
    case ErrorKind::OutOfDomain:
    case ErrorKind::NotSpherical:
        return 3;
    case ErrorKind::Singular: return 4;
    case ErrorKind::DegenerateRatio: return 5;
    case ErrorKind::NotAPair:
    case ErrorKind::GridMismatch:
        return 6;
    case ErrorKind::DegenerateSphereCurve: return 8;
    case ErrorKind::OrderOverflow:
    case ErrorKind::NonConvergent:
    case ErrorKind::IllConditioned:
        return 1;
    }
    return 1;
}

std::pair<std::string, double> parse_tolerance_override(const std::string& s)
{
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
        fail(ErrorKind::InvalidArgument, "tolerance override must look like id=value, got '" + s + "'");
    const std::string id = s.substr(0, eq);
    const std::string val = s.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(val, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != val.size() || !(v > 0.0) || !std::isfinite(v))
        fail(ErrorKind::InvalidArgument, "tolerance for '" + id + "' must be a positive number");
    return {id, v};
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Loaded {
    Curve curve;
    ojson input;
};

Loaded load_input(const std::string& role, const std::string& path)
{
    const std::string text = read_text_file(path);
    Loaded l{read_curve(text), ojson::object()};
    l.input["role"] = role;
    l.input["path"] = path;
    l.input["label"] = l.curve.label();
    l.input["fnv1a64"] = hash_hex(fnv1a64(text));
    return l;
}

ojson make_report(const std::string& command, const ojson& inputs, const ojson& params, const ojson& results,
                  const std::vector<MaskedInterval>& masked)
{
    ojson r;
    r["command"] = command;
    r["inputs"] = inputs;
    r["parameters"] = params;
    r["results"] = results;
    r["masked_intervals"] = masked_to_json(masked);
    r["tool_version"] = kToolVersion;
    return r;
}

ojson stat_json(const ConstancyStat& s)
{
    ojson o;
    o["mean"] = s.mean;
    o["max_dev"] = s.max_dev;
    o["relative"] = s.relative(1.0);
    return o;
}

ojson rows_json(const std::vector<std::vector<double>>& rows)
{
    ojson a = ojson::array();
    for (const auto& r : rows) {
        ojson row = ojson::array();
        for (double v : r) row.push_back(v);
        a.push_back(row);
    }
    return a;
}

std::string csv_text(const std::vector<std::string>& cols, const std::vector<std::vector<double>>& rows)
{
    std::string s = csv_header(cols);
    for (const auto& r : rows) s += csv_line(r);
    return s;
}

ojson strings_json(const std::vector<std::string>& v)
{
    ojson a = ojson::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

void require_positive_n(int n, int minimum, const char* what)
{
    if (n < minimum)
        fail(ErrorKind::InvalidArgument, std::string(what) + " must be at least " + std::to_string(minimum));
}

// Frenet rows: t, s, T, N, B, kappa, tau, dkappa_ds, dtau_ds, d2kappa_ds2, Gamma.
std::vector<double> frenet_row(const FrenetData& fd, double s, int order)
{
    const double dk = order >= 1 ? fd.dkappa_ds : kNaN;
    const double dt = order >= 1 ? fd.dtau_ds : kNaN;
    const double d2k = order >= 2 ? fd.d2kappa_ds2 : kNaN;
    const double G = order >= 1 ? slant_geodesic_indicator(fd) : kNaN;
    return {fd.t,      s,        fd.T[0],  fd.T[1],  fd.T[2],  fd.N[0], fd.N[1], fd.N[2], fd.B[0],
            fd.B[1],   fd.B[2],  fd.kappa, fd.tau,   dk,       dt,       d2k,     G};
}

const std::vector<std::string> kFrenetColumns = {"t",  "s",  "Tx", "Ty",    "Tz",  "Nx",        "Ny",
                                                 "Nz", "Bx", "By", "Bz",    "kappa", "tau", "dkappa_ds",
                                                 "dtau_ds", "d2kappa_ds2", "Gamma"};

} // namespace

CommandResult cmd_frenet(const FrenetArgs& a)
{
    if (a.order < 0 || a.order > 2) fail(ErrorKind::InvalidArgument, "--order must be 0, 1 or 2");
    const Loaded in = load_input("curve", a.curve);
    const Curve& c = in.curve;
    const Domain d = c.domain();

    std::vector<double> t;
    if (a.at) {
        if (!std::isfinite(*a.at) || *a.at < d.lo || *a.at > d.hi) {
            Error err(ErrorKind::OutOfDomain, "t=" + format_real(*a.at) + " lies outside the curve domain");
            err.where = *a.at;
            throw err;
        }
        t = {*a.at};
    } else {
        require_positive_n(a.grid, 2, "--grid");
        t = uniform_grid(d, a.grid);
    }

    std::vector<std::optional<FrenetData>> fd(t.size());
    std::vector<MaskedInterval> masked;
    if (a.mask) {
        auto sw = sweep<FrenetData>(t.size(), [&](std::size_t i) { return frenet_apparatus(c, t[i]); });
        fd = std::move(sw.values);
        masked = masked_intervals(t, sw.reasons);
    } else {
        parallel_for(t.size(), [&](std::size_t i) { fd[i] = frenet_apparatus(c, t[i]); });
    }

    // Arc length from the domain start, accumulated segment by segment.
    auto sw = sweep<double>(t.size(), [&](std::size_t i) {
        return arc_length(c, i == 0 ? d.lo : t[i - 1], t[i]);
    });
    std::vector<double> s(t.size(), kNaN);
    double acc = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        acc = sw.values[i] ? acc + *sw.values[i] : kNaN;
        s[i] = acc;
    }

    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (fd[i]) rows.push_back(frenet_row(*fd[i], s[i], a.order));

    ojson params;
    if (a.at)
        params["at"] = *a.at;
    else
        params["grid"] = a.grid;
    params["order"] = a.order;
    params["mask"] = a.mask;
    ojson results;
    results["label"] = c.label();
    results["curve_type"] = c.kind() == CurveKind::Analytic ? "analytic" : "sampled";
    results["exact_derivatives"] = c.kind() == CurveKind::Analytic || c.origin() != nullptr;
    results["domain"] = ojson::array({d.lo, d.hi});
    results["count"] = rows.size();
    results["columns"] = strings_json(kFrenetColumns);
    results["rows"] = rows_json(rows);

    CommandResult r;
    r.out = dump_json(make_report("frenet", ojson::array({in.input}), params, results, masked));
    if (!a.csv.empty()) r.files.emplace_back(a.csv, csv_text(kFrenetColumns, rows));
    return r;
}

CommandResult cmd_mate(const MateArgs& a)
{
    if (a.lambda.has_value() == a.auto_lambda) fail(ErrorKind::InvalidArgument, "give exactly one of --lambda and --auto");
    if (a.out.empty()) fail(ErrorKind::InvalidArgument, "--out is required");
    require_positive_n(a.n, 16, "--n");
    const Loaded in = load_input("curve", a.curve);
    const Curve& base = in.curve;
    const Domain d = base.domain();

    ojson results;
    double lambda = 0.0;
    if (a.auto_lambda) {
        const std::vector<double> grid = uniform_grid(d, 257);
        std::vector<double> lam(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            const FrenetData fd = frenet_apparatus(base, grid[i]);
            lam[i] = bertrand_lambda(ratio_invariants(fd), fd.kappa);
        });
        const ConstancyStat st = constancy(lam);
        lambda = st.mean;
        results["lambda_source"] = "auto";
        results["lambda_estimate"] = stat_json(st);
    } else {
        lambda = *a.lambda;
        if (!std::isfinite(lambda)) fail(ErrorKind::InvalidArgument, "--lambda must be finite");
        results["lambda_source"] = "given";
    }

    Curve mate;
    std::vector<MaskedInterval> masked;
    const std::string label = base.label().empty() ? "mate" : base.label() + "-mate";
    if (lambda == 0.0) {
        // Same point set, kept exact through a zero offset recipe.
        std::vector<double> t;
        std::vector<Vec3> p;
        if (base.kind() == CurveKind::Sampled) {
            t = base.params();
            p = base.points();
        } else {
            require_positive_n(a.n, 16, "--n");
            t = uniform_grid(d, a.n);
            p.resize(t.size());
            parallel_for(t.size(), [&](std::size_t i) { p[i] = base.point(t[i]); });
        }
        CurveOrigin o;
        o.kind = CurveOrigin::Kind::NormalOffset;
        o.parent = std::make_shared<const Curve>(base);
        o.lambda = 0.0;
        mate = rebuild_derived(o, std::move(t), std::move(p), label);
    } else {
        MateResult mr = construct_mate(base, lambda, a.n);
        mate = mr.curve;
        masked = mr.masked;
    }

    results["lambda"] = lambda;
    ojson pair;
    try {
        const BertrandPairModel pm = detect_bertrand(base, mate, 512);
        pair["accepted"] = true;
        pair["degenerate"] = pm.degenerate;
        pair["epsilon"] = pm.epsilon;
        pair["lambda"] = pm.lambda;
        ojson dg;
        dg["lambda"] = stat_json(pm.diag.lambda);
        dg["p1"] = stat_json(pm.diag.p1);
        dg["p2"] = stat_json(pm.diag.p2);
        dg["q1"] = stat_json(pm.diag.q1);
        dg["q2"] = stat_json(pm.diag.q2);
        dg["g"] = stat_json(pm.diag.g);
        dg["g_tilde"] = stat_json(pm.diag.g_tilde);
        dg["max_normal_gap"] = pm.diag.max_normal_gap;
        dg["max_offset_perp"] = pm.diag.max_offset_perp;
        pair["diagnostics"] = dg;
    } catch (const Error& e) {
        pair["accepted"] = false;
        pair["error"] = error_kind_name(e.kind());
        pair["reason"] = e.reason.empty() ? std::string(e.what()) : e.reason;
    }
    results["pair"] = pair;
    const std::string text = write_curve(mate);
    results["mate_label"] = mate.label();
    results["mate_samples"] = mate.params().size();
    results["mate_fnv1a64"] = hash_hex(fnv1a64(text));

    ojson params;
    if (a.auto_lambda)
        params["auto"] = true;
    else
        params["lambda"] = *a.lambda;
    params["n"] = a.n;
    params["out"] = a.out;

    CommandResult r;
    r.files.emplace_back(a.out, text);
    r.out = dump_json(make_report("mate", ojson::array({in.input}), params, results, masked));
    if (!pair["accepted"].get<bool>())
        r.diagnostics.push_back("warning: the written curve does not form a Bertrand pair with its base (" +
                                pair["reason"].get<std::string>() + ")");
    return r;
}

namespace {

ojson fit_json(const AffineFit& f, double c1, double predicted)
{
    ojson o;
    o["slope"] = f.slope;
    o["intercept"] = f.intercept;
    o["rms_residual"] = f.rms_residual;
    o["c1"] = c1;
    o["c2"] = f.intercept;
    o["predicted_slope"] = predicted;
    o["slope_gap"] = std::fabs(f.slope - predicted) / std::max(std::fabs(predicted), 1e-300);
    o["slope_magnitude_gap"] =
        std::fabs(std::fabs(f.slope) - std::fabs(predicted)) / std::max(std::fabs(predicted), 1e-300);
    return o;
}

BertrandPairModel load_pair(const std::string& base, const std::string& mate, int n, const PairOptions& opt,
                            ojson& inputs)
{
    const Loaded b = load_input("base", base);
    const Loaded m = load_input("mate", mate);
    inputs = ojson::array({b.input, m.input});
    return detect_bertrand(b.curve, m.curve, n, opt);
}

} // namespace

namespace {
const std::vector<std::string> kIndicatrixColumns = {
    "t",           "x",         "y",          "z",           "norm_deviation", "kappa_closed", "tau_closed",
    "Gamma_closed", "kappa_direct", "tau_direct", "Gamma_direct", "gap_kappa",      "gap_tau"};
} // namespace

CommandResult cmd_indicatrix(const IndicatrixArgs& a)
{
    const IndicatrixKind kind = parse_kind(a.kind);
    require_positive_n(a.n, 16, "--n");
    ojson inputs;
    const BertrandPairModel pair = load_pair(a.base, a.mate, a.n, {}, inputs);
    const DirectComparison cmp = compare_with_direct(pair, kind, a.n);

    auto pts = sweep<Vec3>(cmp.t.size(), [&](std::size_t i) { return indicatrix_sample(pair, kind, cmp.t[i]).X; });
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < cmp.t.size(); ++i) {
        const Vec3 X = pts.values[i] ? *pts.values[i] : Vec3{kNaN, kNaN, kNaN};
        rows.push_back({cmp.t[i], X[0], X[1], X[2], cmp.norm_deviation[i], cmp.kappa_closed[i], cmp.tau_closed[i],
                        cmp.Gamma_closed[i], cmp.kappa_direct[i], cmp.tau_direct[i], cmp.Gamma_direct[i],
                        cmp.gap_kappa[i], cmp.gap_tau[i]});
    }

    ojson results;
    results["kind"] = kind_name(kind);
    results["epsilon"] = pair.epsilon;
    results["lambda"] = pair.lambda;
    results["max_gap_kappa"] = cmp.max_gap_kappa;
    results["max_gap_tau"] = cmp.max_gap_tau;
    results["max_gap_kappa_jet"] = cmp.max_gap_kappa_jet;
    results["max_gap_tau_jet"] = cmp.max_gap_tau_jet;
    results["max_gap_Gamma_jet"] = cmp.max_gap_Gamma_jet;
    results["max_gap_printed_kappa"] = cmp.max_gap_printed_kappa;
    results["max_gap_printed_tau"] = cmp.max_gap_printed_tau;
    results["max_norm_deviation"] = cmp.max_norm_deviation;
    if (kind.axis == Axis::Binormal) {
        const ArclengthRelations ar = indicatrix_arclength_relations(pair, a.n);
        results["affine_fit"] = kind.side == Side::Base
                                    ? fit_json(ar.fit_b, ar.c1, ar.predicted_slope_b)
                                    : fit_json(ar.fit_b_mate, ar.c1, ar.predicted_slope_b_mate);
        results["affine_fit"]["c1_relative_deviation"] = ar.c1_stat.relative(1.0);
    }
    results["columns"] = strings_json(kIndicatrixColumns);
    results["rows"] = rows_json(rows);

    ojson params;
    params["kind"] = kind_name(kind);
    params["n"] = a.n;

    CommandResult r;
    if (!a.csv.empty()) r.files.emplace_back(a.csv, csv_text(kIndicatrixColumns, rows));
    if (!a.out.empty()) {
        const IndicatrixCurve ic = indicatrix_curve(pair, kind, a.n);
        r.files.emplace_back(a.out, write_curve(ic.curve));
    }
    r.out = dump_json(make_report("indicatrix", inputs, params, results, cmp.masked));
    return r;
}

CommandResult cmd_verify(const VerifyArgs& a)
{
    require_positive_n(a.n, 256, "--n");
    for (const auto& [id, v] : a.tol) {
        const auto ids = theorem_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            fail(ErrorKind::InvalidArgument, "unknown theorem id '" + id + "'");
        (void)v;
    }
    // Detection is deliberately loose so that a slightly broken pair
    // reaches the theorem suite and fails there with a named entry.
    const PairOptions loose{1e-2, 1e-2, 1e-2};
    ojson inputs;
    const BertrandPairModel pair = load_pair(a.base, a.mate, std::min(a.n, 1024), loose, inputs);
    const TheoremReport rep = theorem_suite(pair, a.n, a.tol);

    std::string text;
    char buf[256];
    std::snprintf(buf, sizeof buf, "theorem suite: epsilon=%d lambda=%s n=%d\n", rep.epsilon,
                  format_real(rep.lambda).c_str(), rep.n);
    text += buf;
    ojson entries = ojson::array();
    for (const auto& e : rep.entries) {
        std::snprintf(buf, sizeof buf, "%s %-16s %-14s residual=%s tolerance=%s masked=%s\n", e.pass ? "PASS" : "FAIL",
                      e.id.c_str(), entry_kind_name(e.kind).c_str(), format_real(e.max_residual).c_str(),
                      format_real(e.tolerance).c_str(), format_real(e.masked_fraction).c_str());
        text += buf;
        if (e.kind == EntryKind::Condition)
            for (const auto& [k, v] : e.details)
                if (k == "consistent")
                    text += std::string("     ") + (v == 1.0 ? "condition agrees with the classification flags\n"
                                                             : "condition disagrees with the classification flags\n");
        ojson o;
        o["id"] = e.id;
        o["kind"] = entry_kind_name(e.kind);
        o["pass"] = e.pass;
        o["max_residual"] = e.max_residual;
        o["tolerance"] = e.tolerance;
        o["masked_fraction"] = e.masked_fraction;
        ojson flags = ojson::object();
        for (std::size_t i = 0; i < e.flags.size(); ++i) flags[e.flag_names[i]] = static_cast<bool>(e.flags[i]);
        o["flags"] = flags;
        ojson det = ojson::object();
        for (const auto& [k, v] : e.details) det[k] = v;
        o["details"] = det;
        if (!e.note.empty()) o["note"] = e.note;
        entries.push_back(o);
    }
    const bool ok = rep.identities_pass();
    text += ok ? "identities: PASS\n" : "identities: FAIL\n";

    ojson results;
    results["epsilon"] = rep.epsilon;
    results["lambda"] = rep.lambda;
    results["identities_pass"] = ok;
    results["entries"] = entries;
    ojson params;
    params["n"] = a.n;
    ojson tol = ojson::object();
    for (const auto& [id, v] : a.tol) tol[id] = v;
    params["tol"] = tol;
    std::vector<MaskedInterval> masked = pair.masked;

    CommandResult r;
    r.out = text + "\n" + dump_json(make_report("verify", inputs, params, results, masked));
    r.exit_code = ok ? 0 : 7;
    if (!ok)
        for (const auto& e : rep.entries)
            if (e.kind == EntryKind::Identity && !e.pass) r.diagnostics.push_back("identity failed: " + e.id);
    return r;
}

CommandResult cmd_generate(const GenerateArgs& a)
{
    if (a.out.empty()) fail(ErrorKind::InvalidArgument, "--out is required");
    require_positive_n(a.n, 16, "--n");
    Curve sphere;
    ojson input;
    double omega = std::numbers::pi / 3;
    if (std::filesystem::exists(a.sphere)) {
        Loaded l = load_input("sphere-curve", a.sphere);
        sphere = l.curve;
        input = l.input;
    } else if (auto p = sphere_preset(a.sphere)) {
        sphere = p->curve;
        omega = p->omega;
        input["role"] = "sphere-curve";
        input["preset"] = a.sphere;
    } else {
        std::string names;
        for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
        fail(ErrorKind::Io, "'" + a.sphere + "' is neither a file nor a preset (" + names + ")");
    }
    if (a.omega) omega = *a.omega;

    const GeneratedCurve g = generate_bertrand_curve(sphere, a.a, omega, a.n);
    const std::string text = write_curve(g.curve);

    ojson params;
    params["sphere_curve"] = a.sphere;
    params["a"] = a.a;
    params["omega"] = omega;
    params["n"] = a.n;
    params["out"] = a.out;
    ojson results;
    results["label"] = g.curve.label();
    results["lambda_nominal"] = g.lambda_nominal;
    results["a"] = g.a;
    results["omega"] = g.omega;
    results["n"] = g.n;
    results["helical"] = g.helical;
    if (g.helical) results["warning"] = g.warning;
    results["output_fnv1a64"] = hash_hex(fnv1a64(text));

    CommandResult r;
    r.files.emplace_back(a.out, text);
    if (g.helical) r.diagnostics.push_back("warning: " + g.warning);
    r.out = dump_json(make_report("generate", ojson::array({input}), params, results, {}));
    return r;
}

CommandResult cmd_classify(const ClassifyArgs& a)
{
    if (a.files.empty() || a.files.size() > 2) fail(ErrorKind::InvalidArgument, "classify takes one curve or a pair");
    require_positive_n(a.n, 64, "--n");
    ojson inputs = ojson::array();
    ojson results;
    std::vector<MaskedInterval> masked;
    if (a.files.size() == 1) {
        const Loaded l = load_input("curve", a.files[0]);
        inputs.push_back(l.input);
        const CurveClass cc = classify_curve(l.curve, a.n);
        results["planar"] = cc.planar;
        results["general_helix"] = cc.general_helix;
        results["slant_helix"] = cc.slant_helix;
        results["spherical"] = cc.spherical;
        results["sphere_fit_degenerate"] = cc.sphere_fit_degenerate;
        ojson m;
        m["tau_max"] = cc.metrics.tau_max;
        m["kappa_max"] = cc.metrics.kappa_max;
        m["f_deviation"] = cc.metrics.f_deviation;
        m["Gamma_deviation"] = cc.metrics.Gamma_deviation;
        m["sphere_fit_residual"] = cc.metrics.sphere_fit_residual;
        const Vec3& ctr = cc.metrics.sphere_center;
        m["sphere_center"] = ojson::array({ctr[0], ctr[1], ctr[2]});
        m["sphere_radius"] = cc.metrics.sphere_radius;
        results["metrics"] = m;
        results["masked_fraction"] = cc.masked_fraction;
        masked = cc.masked;
    } else {
        const Loaded l0 = load_input("first", a.files[0]);
        const Loaded l1 = load_input("second", a.files[1]);
        inputs.push_back(l0.input);
        inputs.push_back(l1.input);
        PairClassifyOptions opt;
        opt.arclength_aligned = a.arclength_aligned;
        const PairClass pc = pair_classify(l0.curve, l1.curve, a.n, opt);
        results["verdict"] = verdict_name(pc.verdict);
        results["arclength_aligned"] = pc.arclength_aligned;
        ojson ev = ojson::array();
        for (const auto& e : pc.evidence) {
            ojson o;
            o["category"] = e.category;
            o["pass"] = e.pass;
            o["offset_misalignment"] = e.offset_misalignment;
            o["frame_misalignment"] = e.frame_misalignment;
            o["offset_variation"] = e.offset_variation;
            o["offset_mean"] = e.offset_mean;
            o["failed"] = e.failed;
            ev.push_back(o);
        }
        results["evidence"] = ev;
        results["masked_fraction"] = pc.masked_fraction;
        masked = pc.masked;
    }
    ojson params;
    params["n"] = a.n;
    params["arclength_aligned"] = a.arclength_aligned;
    CommandResult r;
    r.out = dump_json(make_report("classify", inputs, params, results, masked));
    return r;
}

} // namespace bk
