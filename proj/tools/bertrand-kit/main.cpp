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

// Command-line front end. Parses flags, calls the C interface and routes
// results to stdout, diagnostics to stderr.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bertrand_kit/bertrand_kit.h"

namespace {

int report_failure(bk_status st)
{
    std::fprintf(stderr, "bertrand-kit: error [%s]: %s\n", bk_last_error_kind(), bk_last_error());
    return static_cast<int>(st);
}

// Prints and writes a command result, then frees it.
int deliver(bk_status st, bk_result* res)
{
    if (!res) return report_failure(st);
    int code = static_cast<int>(st);
    const bk_status wst = bk_result_write_files(res);
    if (wst != BK_OK) {
        bk_result_free(res);
        return report_failure(wst);
    }
    std::fputs(bk_result_stdout(res), stdout);
    std::fflush(stdout);
    for (size_t i = 0; i < bk_result_diagnostic_count(res); ++i)
        std::fprintf(stderr, "%s\n", bk_result_diagnostic(res, i));
    bk_result_free(res);
    return code;
}

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bertrand curve pairs, their indicatrices and the relations between them"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bk_version()));

    // frenet
    std::string fr_curve, fr_csv;
    double fr_at = 0.0;
    int fr_grid = 256, fr_order = 2;
    bool fr_mask = false;
    auto* fr = app.add_subcommand("frenet", "Frenet apparatus of a curve file");
    fr->add_option("curve", fr_curve, "curve file")->required();
    auto* fr_at_opt = fr->add_option("--at", fr_at, "single parameter value");
    fr->add_option("--grid", fr_grid, "number of uniform grid points")->excludes(fr_at_opt);
    fr->add_option("--order", fr_order, "highest arc-length derivative written (0-2)");
    fr->add_flag("--mask", fr_mask, "mask singular points instead of failing");
    fr->add_option("--csv", fr_csv, "also write the rows as CSV");

    // mate
    std::string ma_curve, ma_out;
    double ma_lambda = 0.0;
    bool ma_auto = false;
    int ma_n = 4096;
    auto* ma = app.add_subcommand("mate", "offset a curve along its principal normal");
    ma->add_option("curve", ma_curve, "base curve file")->required();
    auto* ma_lambda_opt = ma->add_option("--lambda", ma_lambda, "offset distance");
    auto* ma_auto_opt = ma->add_flag("--auto", ma_auto, "take the offset from the ratio invariants");
    ma_lambda_opt->excludes(ma_auto_opt);
    ma->add_option("--n", ma_n, "number of samples of the mate");
    ma->add_option("--out", ma_out, "mate curve file")->required();

    // indicatrix
    std::string in_base, in_mate, in_kind, in_csv, in_out;
    int in_n = 512;
    auto* in = app.add_subcommand("indicatrix", "indicatrix apparatus of a pair, closed form against direct");
    in->add_option("base", in_base, "base curve file")->required();
    in->add_option("mate", in_mate, "mate curve file")->required();
    in->add_option("--kind", in_kind, "t|n|b-base|mate, e.g. b-mate")
        ->required()
        ->check(CLI::IsMember({"t-base", "n-base", "b-base", "t-mate", "n-mate", "b-mate"}));
    in->add_option("--n", in_n, "grid points");
    in->add_option("--csv", in_csv, "write the per-row table as CSV");
    in->add_option("--out", in_out, "write the sampled indicatrix as a curve file");

    // verify
    std::string ve_base, ve_mate;
    int ve_n = 512;
    std::vector<std::string> ve_tol;
    auto* ve = app.add_subcommand("verify", "run the theorem suite on a pair");
    ve->add_option("base", ve_base, "base curve file")->required();
    ve->add_option("mate", ve_mate, "mate curve file")->required();
    ve->add_option("--n", ve_n, "grid points (at least 256)");
    ve->add_option("--tol", ve_tol, "tolerance override id=value, repeatable");

    // generate
    std::string ge_sphere, ge_out;
    double ge_a = 1.0, ge_omega = 0.0;
    int ge_n = 4096;
    auto* ge = app.add_subcommand("generate", "Bertrand curve from a curve on the unit sphere");
    ge->add_option("--sphere-curve", ge_sphere, "curve file or preset name")->required();
    ge->add_option("--a", ge_a, "scale a > 0");
    auto* ge_omega_opt = ge->add_option("--omega", ge_omega, "angle in (0, pi), not pi/2");
    ge->add_option("--n", ge_n, "number of samples");
    ge->add_option("--out", ge_out, "output curve file")->required();

    // classify
    std::vector<std::string> cl_files;
    int cl_n = 512;
    bool cl_aligned = false;
    auto* cl = app.add_subcommand("classify", "classify a curve, or a pair of curves");
    cl->add_option("files", cl_files, "one curve file or two")->required()->expected(1, 2);
    cl->add_option("--n", cl_n, "grid points");
    cl->add_flag("--arclength-aligned", cl_aligned, "match pair points by arc-length fraction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BK_ERR_PARSE;
    }

    bk_result* res = nullptr;
    bk_status st = BK_OK;
    if (*fr) {
        bk_frenet_args a{fr_curve.c_str(), *fr_at_opt ? 1 : 0, fr_at, fr_grid, fr_order, fr_mask ? 1 : 0,
                         opt_cstr(fr_csv)};
        st = bk_cmd_frenet(&a, &res);
    } else if (*ma) {
        if (!*ma_lambda_opt && !ma_auto) {
            std::fprintf(stderr, "bertrand-kit: mate needs --lambda or --auto\n");
            return BK_ERR_PARSE;
        }
        bk_mate_args a{ma_curve.c_str(), ma_auto ? 1 : 0, ma_lambda, ma_n, ma_out.c_str()};
        st = bk_cmd_mate(&a, &res);
    } else if (*in) {
        bk_indicatrix_args a{in_base.c_str(), in_mate.c_str(), in_kind.c_str(), in_n, opt_cstr(in_csv),
                             opt_cstr(in_out)};
        st = bk_cmd_indicatrix(&a, &res);
    } else if (*ve) {
        std::vector<const char*> tol;
        for (const auto& s : ve_tol) tol.push_back(s.c_str());
        bk_verify_args a{ve_base.c_str(), ve_mate.c_str(), ve_n, tol.data(), tol.size()};
        st = bk_cmd_verify(&a, &res);
    } else if (*ge) {
        bk_generate_args a{ge_sphere.c_str(), ge_a, *ge_omega_opt ? 1 : 0, ge_omega, ge_n, ge_out.c_str()};
        st = bk_cmd_generate(&a, &res);
    } else if (*cl) {
        std::vector<const char*> files;
        for (const auto& s : cl_files) files.push_back(s.c_str());
        bk_classify_args a{files.data(), files.size(), cl_n, cl_aligned ? 1 : 0};
        st = bk_cmd_classify(&a, &res);
    }
    return deliver(st, res);
}
