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
#include <cstring>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bertrand_kit/bertrand_kit.h"

namespace {

struct CurveHandle {
    bk_curve* c = nullptr;
    ~CurveHandle() { bk_curve_free(c); }
};

std::string data_path(const char* name) { return std::string(BK_TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST(CApi, Version) { EXPECT_STREQ(bk_version(), "0.1.0"); }

TEST(CApi, NullArgumentsAreRejected)
{
    bk_curve* c = nullptr;
    EXPECT_NE(bk_curve_analytic(nullptr, "t", "t", 0, 1, nullptr, &c), BK_OK);
    EXPECT_EQ(c, nullptr);
    EXPECT_STRNE(bk_last_error(), "");
    EXPECT_NE(bk_curve_domain(nullptr, nullptr, nullptr), BK_OK);
    bk_curve_free(nullptr);
    bk_pair_free(nullptr);
    bk_result_free(nullptr);
    bk_string_free(nullptr);
}

TEST(CApi, ErrorsMapToStatuses)
{
    CurveHandle h;
    EXPECT_EQ(bk_curve_analytic("3*", "t", "t", 0, 1, "x", &h.c), BK_ERR_PARSE);
    EXPECT_STREQ(bk_last_error_kind(), "SyntaxError");
    ASSERT_EQ(bk_curve_analytic("t", "t", "t", 0, 1, "line", &h.c), BK_OK);
    bk_frenet fr;
    EXPECT_EQ(bk_curve_frenet(h.c, 0.5, &fr), BK_ERR_SINGULAR);
    EXPECT_EQ(bk_curve_frenet(h.c, 5.0, &fr), BK_ERR_DOMAIN);
    EXPECT_STREQ(bk_last_error_kind(), "OutOfDomain");

    CurveHandle g;
    ASSERT_EQ(bk_curve_preset("great-circle", &g.c), BK_OK);
    bk_curve* gen = nullptr;
    double lam = 0.0;
    EXPECT_EQ(bk_generate(g.c, 1.0, 1.0, 256, &gen, &lam), BK_ERR_DEGENERATE_SPHERE);
    EXPECT_EQ(bk_curve_preset("nope", &g.c), BK_ERR_PARSE);
}

TEST(CApi, HelixFrenet)
{
    CurveHandle h;
    ASSERT_EQ(bk_curve_analytic("3*cos(t)", "3*sin(t)", "4*t", 0, 6, "helix", &h.c), BK_OK);
    double lo = 0, hi = 0;
    ASSERT_EQ(bk_curve_domain(h.c, &lo, &hi), BK_OK);
    EXPECT_EQ(lo, 0.0);
    EXPECT_EQ(hi, 6.0);
    bk_frenet fr;
    ASSERT_EQ(bk_curve_frenet(h.c, 1.0, &fr), BK_OK);
    EXPECT_NEAR(fr.kappa, 0.12, 1e-14);
    EXPECT_NEAR(fr.tau, 0.16, 1e-14);
    EXPECT_NEAR(fr.speed, 5.0, 1e-14);
    EXPECT_NEAR(fr.Gamma, 0.0, 1e-14);
    EXPECT_NEAR(fr.B[2], 0.6, 1e-14);
}

TEST(CApi, SampledAndJsonRoundTrip)
{
    const size_t n = 41;
    std::vector<double> t(n), xyz(3 * n);
    for (size_t i = 0; i < n; ++i) {
        t[i] = 0.05 * static_cast<double>(i);
        xyz[3 * i] = std::cos(t[i]);
        xyz[3 * i + 1] = std::sin(t[i]);
        xyz[3 * i + 2] = 0.0;
    }
    CurveHandle c;
    ASSERT_EQ(bk_curve_sampled(t.data(), xyz.data(), n, "arc", &c.c), BK_OK);
    char* text = nullptr;
    ASSERT_EQ(bk_curve_to_json(c.c, &text), BK_OK);
    CurveHandle back;
    ASSERT_EQ(bk_curve_from_json(text, &back.c), BK_OK);
    char* again = nullptr;
    ASSERT_EQ(bk_curve_to_json(back.c, &again), BK_OK);
    EXPECT_STREQ(text, again);
    bk_string_free(text);
    bk_string_free(again);
    bk_frenet fr;
    ASSERT_EQ(bk_curve_frenet(back.c, 1.0, &fr), BK_OK);
    EXPECT_NEAR(fr.kappa, 1.0, 1e-8);

    CurveHandle bad;
    EXPECT_EQ(bk_curve_sampled(t.data(), xyz.data(), 3, "tiny", &bad.c), BK_ERR_PARSE);
}

TEST(CApi, GenerateMateAndDetect)
{
    CurveHandle s, gen, mate;
    ASSERT_EQ(bk_curve_preset("wobble", &s.c), BK_OK);
    double lam = 0.0;
    ASSERT_EQ(bk_generate(s.c, 1.0, 1.0471975511965976, 1024, &gen.c, &lam), BK_OK);
    EXPECT_GT(lam, 0.0);
    ASSERT_EQ(bk_construct_mate(gen.c, lam, 1024, &mate.c), BK_OK);
    bk_pair* p = nullptr;
    ASSERT_EQ(bk_pair_detect(gen.c, mate.c, 256, &p), BK_OK);
    double l = 0.0;
    int e = 0;
    ASSERT_EQ(bk_pair_info(p, &l, &e), BK_OK);
    EXPECT_NEAR(l, lam, 1e-9);
    EXPECT_EQ(e, -1);
    bk_pair_free(p);

    CurveHandle helix;
    ASSERT_EQ(bk_curve_analytic("3*cos(t)", "3*sin(t)", "4*t + 1", 0, 6, "moved", &helix.c), BK_OK);
    EXPECT_EQ(bk_pair_detect(gen.c, helix.c, 256, &p), BK_ERR_NOT_A_PAIR);
}

TEST(CApi, Commands)
{
    const std::string path = data_path("capi_gen.json");
    bk_generate_args ga{"wobble", 1.0, 0, 0.0, 1024, path.c_str()};
    bk_result* r = nullptr;
    ASSERT_EQ(bk_cmd_generate(&ga, &r), BK_OK) << bk_last_error();
    ASSERT_EQ(bk_result_file_count(r), 1u);
    EXPECT_EQ(path, bk_result_file_path(r, 0));
    size_t size = 0;
    EXPECT_NE(bk_result_file_data(r, 0, &size), nullptr);
    EXPECT_GT(size, 1000u);
    ASSERT_EQ(bk_result_write_files(r), BK_OK);
    EXPECT_NE(std::strstr(bk_result_stdout(r), "\"command\": \"generate\""), nullptr);
    bk_result_free(r);

    bk_frenet_args fa{path.c_str(), 1, 0.6, 256, 2, 0, nullptr};
    ASSERT_EQ(bk_cmd_frenet(&fa, &r), BK_OK) << bk_last_error();
    EXPECT_NE(std::strstr(bk_result_stdout(r), "kappa"), nullptr);
    bk_result_free(r);

    fa.at = 7.0;
    r = nullptr;
    EXPECT_EQ(bk_cmd_frenet(&fa, &r), BK_ERR_DOMAIN);
    EXPECT_EQ(r, nullptr);

    bk_frenet_args missing{"/nonexistent/file.json", 0, 0.0, 64, 2, 0, nullptr};
    EXPECT_EQ(bk_cmd_frenet(&missing, &r), BK_ERR_PARSE);

    const char* files[] = {path.c_str()};
    bk_classify_args ca{files, 1, 256, 0};
    ASSERT_EQ(bk_cmd_classify(&ca, &r), BK_OK) << bk_last_error();
    bk_result_free(r);
}
