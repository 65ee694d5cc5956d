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

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bertrand_kit/bertrand.hpp"
#include "bertrand_kit/bertrand_kit.h"
#include "bertrand_kit/commands.hpp"
#include "bertrand_kit/io.hpp"

struct bk_curve {
    bk::Curve curve;
};

struct bk_pair {
    bk::BertrandPairModel model;
};

struct bk_result {
    bk::CommandResult r;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_kind;

bk_status set_error(int code, const std::string& kind, const std::string& msg)
{
    g_error = msg;
    g_error_kind = kind;
    return static_cast<bk_status>(code);
}

// Runs fn, translating exceptions into status codes.
template <class F>
bk_status guarded(F&& fn)
{
    g_error.clear();
    g_error_kind.clear();
    try {
        return fn();
    } catch (const bk::Error& e) {
        return set_error(bk::exit_code_for(e.kind()), bk::error_kind_name(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(BK_ERR_OTHER, "OutOfMemory", "out of memory");
    } catch (const std::exception& e) {
        return set_error(BK_ERR_OTHER, "Internal", e.what());
    }
}

bk_status null_argument(const char* what)
{
    return set_error(BK_ERR_PARSE, "InvalidArgument", std::string("null argument: ") + what);
}

std::string str(const char* s) { return s ? std::string(s) : std::string(); }

bk_status finish(bk::CommandResult r, bk_result** out)
{
    const int code = r.exit_code;
    *out = new bk_result{std::move(r)};
    if (code != 0) return set_error(code, "IdentityFailure", "one or more identities failed");
    return BK_OK;
}

} // namespace

extern "C" {

const char* bk_version(void) { return bk::kToolVersion; }
const char* bk_last_error(void) { return g_error.c_str(); }
const char* bk_last_error_kind(void) { return g_error_kind.c_str(); }

bk_status bk_curve_analytic(const char* x, const char* y, const char* z, double lo, double hi, const char* label,
                            bk_curve** out)
{
    if (!x || !y || !z || !out) return null_argument("expression or output");
    return guarded([&] {
        *out = new bk_curve{bk::Curve::analytic(x, y, z, {lo, hi}, str(label))};
        return BK_OK;
    });
}

bk_status bk_curve_sampled(const double* t, const double* xyz, size_t n, const char* label, bk_curve** out)
{
    if (!t || !xyz || !out) return null_argument("samples or output");
    return guarded([&] {
        std::vector<double> tv(t, t + n);
        std::vector<bk::Vec3> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = {xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]};
        *out = new bk_curve{bk::Curve::sampled(std::move(tv), std::move(p), str(label))};
        return BK_OK;
    });
}

bk_status bk_curve_preset(const char* name, bk_curve** out)
{
    if (!name || !out) return null_argument("name or output");
    return guarded([&] {
        auto p = bk::sphere_preset(name);
        if (!p) bk::fail(bk::ErrorKind::InvalidArgument, std::string("unknown preset '") + name + "'");
        *out = new bk_curve{p->curve};
        return BK_OK;
    });
}

bk_status bk_curve_load(const char* path, bk_curve** out)
{
    if (!path || !out) return null_argument("path or output");
    return guarded([&] {
        *out = new bk_curve{bk::load_curve_file(path)};
        return BK_OK;
    });
}

bk_status bk_curve_from_json(const char* text, bk_curve** out)
{
    if (!text || !out) return null_argument("text or output");
    return guarded([&] {
        *out = new bk_curve{bk::read_curve(text)};
        return BK_OK;
    });
}

bk_status bk_curve_to_json(const bk_curve* c, char** text)
{
    if (!c || !text) return null_argument("curve or output");
    return guarded([&] {
        const std::string s = bk::write_curve(c->curve);
        char* buf = static_cast<char*>(std::malloc(s.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *text = buf;
        return BK_OK;
    });
}

bk_status bk_curve_domain(const bk_curve* c, double* lo, double* hi)
{
    if (!c || !lo || !hi) return null_argument("curve or output");
    return guarded([&] {
        const bk::Domain d = c->curve.domain();
        *lo = d.lo;
        *hi = d.hi;
        return BK_OK;
    });
}

void bk_curve_free(bk_curve* c) { delete c; }
void bk_string_free(char* s) { std::free(s); }

bk_status bk_curve_frenet(const bk_curve* c, double t, bk_frenet* out)
{
    if (!c || !out) return null_argument("curve or output");
    return guarded([&] {
        const bk::FrenetData fd = bk::frenet_apparatus(c->curve, t);
        out->t = fd.t;
        out->speed = fd.speed;
        for (int i = 0; i < 3; ++i) {
            out->T[i] = fd.T[static_cast<size_t>(i)];
            out->N[i] = fd.N[static_cast<size_t>(i)];
            out->B[i] = fd.B[static_cast<size_t>(i)];
        }
        out->kappa = fd.kappa;
        out->tau = fd.tau;
        out->dkappa_ds = fd.dkappa_ds;
        out->dtau_ds = fd.dtau_ds;
        out->d2kappa_ds2 = fd.d2kappa_ds2;
        out->Gamma = bk::slant_geodesic_indicator(fd);
        return BK_OK;
    });
}

bk_status bk_generate(const bk_curve* sphere, double a, double omega, int n, bk_curve** out, double* lambda_nominal)
{
    if (!sphere || !out) return null_argument("sphere curve or output");
    return guarded([&] {
        const bk::GeneratedCurve g = bk::generate_bertrand_curve(sphere->curve, a, omega, n);
        *out = new bk_curve{g.curve};
        if (lambda_nominal) *lambda_nominal = g.lambda_nominal;
        return BK_OK;
    });
}

bk_status bk_construct_mate(const bk_curve* base, double lambda, int n, bk_curve** out)
{
    if (!base || !out) return null_argument("base or output");
    return guarded([&] {
        *out = new bk_curve{bk::construct_mate(base->curve, lambda, n).curve};
        return BK_OK;
    });
}

bk_status bk_pair_detect(const bk_curve* base, const bk_curve* mate, int n, bk_pair** out)
{
    if (!base || !mate || !out) return null_argument("curve or output");
    return guarded([&] {
        *out = new bk_pair{bk::detect_bertrand(base->curve, mate->curve, n)};
        return BK_OK;
    });
}

bk_status bk_pair_info(const bk_pair* p, double* lambda, int* epsilon)
{
    if (!p) return null_argument("pair");
    if (lambda) *lambda = p->model.lambda;
    if (epsilon) *epsilon = p->model.epsilon;
    return BK_OK;
}

void bk_pair_free(bk_pair* p) { delete p; }

bk_status bk_cmd_frenet(const bk_frenet_args* a, bk_result** out)
{
    if (!a || !a->curve || !out) return null_argument("arguments");
    return guarded([&] {
        bk::FrenetArgs f;
        f.curve = a->curve;
        if (a->use_at) f.at = a->at;
        f.grid = a->grid;
        f.order = a->order;
        f.mask = a->mask != 0;
        f.csv = str(a->csv);
        return finish(bk::cmd_frenet(f), out);
    });
}

bk_status bk_cmd_mate(const bk_mate_args* a, bk_result** out)
{
    if (!a || !a->curve || !out) return null_argument("arguments");
    return guarded([&] {
        bk::MateArgs m;
        m.curve = a->curve;
        m.auto_lambda = a->auto_lambda != 0;
        if (!m.auto_lambda) m.lambda = a->lambda;
        m.n = a->n;
        m.out = str(a->out);
        return finish(bk::cmd_mate(m), out);
    });
}

bk_status bk_cmd_indicatrix(const bk_indicatrix_args* a, bk_result** out)
{
    if (!a || !a->base || !a->mate || !a->kind || !out) return null_argument("arguments");
    return guarded([&] {
        bk::IndicatrixArgs i;
        i.base = a->base;
        i.mate = a->mate;
        i.kind = a->kind;
        i.n = a->n;
        i.csv = str(a->csv);
        i.out = str(a->out);
        return finish(bk::cmd_indicatrix(i), out);
    });
}

bk_status bk_cmd_verify(const bk_verify_args* a, bk_result** out)
{
    if (!a || !a->base || !a->mate || !out || (a->tol_count && !a->tol)) return null_argument("arguments");
    return guarded([&] {
        bk::VerifyArgs v;
        v.base = a->base;
        v.mate = a->mate;
        v.n = a->n;
        for (size_t i = 0; i < a->tol_count; ++i) {
            const auto [id, val] = bk::parse_tolerance_override(str(a->tol[i]));
            v.tol[id] = val;
        }
        return finish(bk::cmd_verify(v), out);
    });
}

bk_status bk_cmd_generate(const bk_generate_args* a, bk_result** out)
{
    if (!a || !a->sphere || !out) return null_argument("arguments");
    return guarded([&] {
        bk::GenerateArgs g;
        g.sphere = a->sphere;
        g.a = a->a;
        if (a->has_omega) g.omega = a->omega;
        g.n = a->n;
        g.out = str(a->out);
        return finish(bk::cmd_generate(g), out);
    });
}

bk_status bk_cmd_classify(const bk_classify_args* a, bk_result** out)
{
    if (!a || !out || (a->file_count && !a->files)) return null_argument("arguments");
    return guarded([&] {
        bk::ClassifyArgs c;
        for (size_t i = 0; i < a->file_count; ++i) c.files.push_back(str(a->files[i]));
        c.n = a->n;
        c.arclength_aligned = a->arclength_aligned != 0;
        return finish(bk::cmd_classify(c), out);
    });
}

const char* bk_result_stdout(const bk_result* r) { return r ? r->r.out.c_str() : ""; }

size_t bk_result_diagnostic_count(const bk_result* r) { return r ? r->r.diagnostics.size() : 0; }

const char* bk_result_diagnostic(const bk_result* r, size_t i)
{
    return r && i < r->r.diagnostics.size() ? r->r.diagnostics[i].c_str() : nullptr;
}

size_t bk_result_file_count(const bk_result* r) { return r ? r->r.files.size() : 0; }

const char* bk_result_file_path(const bk_result* r, size_t i)
{
    return r && i < r->r.files.size() ? r->r.files[i].first.c_str() : nullptr;
}

const char* bk_result_file_data(const bk_result* r, size_t i, size_t* size)
{
    if (!r || i >= r->r.files.size()) return nullptr;
    if (size) *size = r->r.files[i].second.size();
    return r->r.files[i].second.data();
}

bk_status bk_result_write_files(const bk_result* r)
{
    if (!r) return null_argument("result");
    return guarded([&] {
        for (const auto& [path, data] : r->r.files) bk::write_text_file(path, data);
        return BK_OK;
    });
}

void bk_result_free(bk_result* r) { delete r; }

} // extern "C"
