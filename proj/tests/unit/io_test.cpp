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
#include <limits>

#include <gtest/gtest.h>

#include "bertrand_kit/commands.hpp"
#include "bertrand_kit/io.hpp"
#include "support.hpp"

using namespace bk;

namespace {

ErrorKind read_error(const std::string& text)
{
    try {
        read_curve(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorKind::Io;
}

void expect_round_trip(const Curve& c)
{
    const std::string a = write_curve(c);
    const Curve back = read_curve(a);
    EXPECT_EQ(write_curve(back), a) << c.label();
    EXPECT_EQ(back.kind(), c.kind());
    EXPECT_EQ(back.label(), c.label());
    for (double t : uniform_grid(c.domain(), 17)) {
        EXPECT_EQ(distance(back.point(t), c.point(t)), 0.0);
        // Exact derivatives survive for derived curves.
        const FrenetData x = frenet_apparatus(c, t), y = frenet_apparatus(back, t);
        EXPECT_EQ(x.kappa, y.kappa);
        EXPECT_EQ(x.tau, y.tau);
    }
}

} // namespace

TEST(Format, Reals)
{
    EXPECT_EQ(format_real(1.0), "1.0000000000000000e+00");
    EXPECT_EQ(format_real(-0.0), "0.0000000000000000e+00");
    EXPECT_EQ(format_real(std::numeric_limits<double>::quiet_NaN()), "nan");
    EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_real(-std::numeric_limits<double>::infinity()), "-inf");
    bkt::ExprGenerator rng(9);
    for (int i = 0; i < 1000; ++i) {
        const double v = std::ldexp(rng.uniform(-1.0, 1.0), static_cast<int>(rng.uniform(-60, 60)));
        EXPECT_EQ(std::stod(format_real(v)), v);
    }
}

TEST(Format, Csv)
{
    EXPECT_EQ(csv_header({"t", "x"}), "t,x\n");
    EXPECT_EQ(csv_line({0.5, std::nan("")}), "5.0000000000000000e-01,nan\n");
}

TEST(Format, JsonDump)
{
    ojson j;
    j["a"] = 0.25;
    j["b"] = {1.0, 2.0};
    j["c"] = std::numeric_limits<double>::quiet_NaN();
    const std::string s = dump_json(j);
    EXPECT_NE(s.find("\"a\": 2.5000000000000000e-01"), std::string::npos) << s;
    EXPECT_NE(s.find("[1.0000000000000000e+00, 2.0000000000000000e+00]"), std::string::npos) << s;
    EXPECT_NE(s.find("\"c\": null"), std::string::npos) << s;
    EXPECT_EQ(dump_json(j), s);
}

TEST(Hash, Fnv1aVectors)
{
    EXPECT_EQ(hash_hex(fnv1a64("")), "cbf29ce484222325");
    EXPECT_EQ(hash_hex(fnv1a64("a")), "af63dc4c8601ec8c");
    EXPECT_EQ(hash_hex(fnv1a64("foobar")), "85944171f73967e8");
}

TEST(CurveFile, RoundTrips)
{
    expect_round_trip(bkt::helix());
    const Curve circ = bkt::circle(1.0);
    const std::vector<double> grid = uniform_grid(circ.domain(), 64);
    std::vector<Vec3> pts;
    for (double t : grid) pts.push_back(circ.point(t));
    expect_round_trip(Curve::sampled(grid, pts, "sampled-circle"));
    const auto& gp = bkt::generated_pair("wobble");
    expect_round_trip(gp.gen.curve);
    expect_round_trip(gp.mate);
    expect_round_trip(perturb_curve(gp.mate, {parse_expression("0.001*sin(50*t)"), parse_expression("0"),
                                              parse_expression("0.001*cos(37*t)")},
                                    256));
}

TEST(CurveFile, DocumentLayout)
{
    const ojson j = curve_to_json(bkt::helix());
    EXPECT_EQ(j["schema_version"], kCurveSchemaVersion);
    EXPECT_EQ(j["type"], "analytic");
    EXPECT_EQ(j["analytic"]["domain"].size(), 2u);
    const ojson g = curve_to_json(bkt::generated_pair("cap").gen.curve);
    EXPECT_EQ(g["type"], "sampled");
    EXPECT_EQ(g["generator"]["kind"], "bertrand-generator");
    EXPECT_EQ(g["generator"]["n"], 4096);
}

TEST(CurveFile, MalformedDocuments)
{
    const std::pair<const char*, ErrorKind> cases[] = {
        {"not json", ErrorKind::Format},
        {"{}", ErrorKind::Format},
        {R"j({"schema_version": 99, "type": "analytic",
             "analytic": {"x": "t", "y": "t", "z": "t", "domain": [0, 1]}})j",
         ErrorKind::Format},
        {R"j({"schema_version": 1, "type": "analytic", "analytic": {"x": "t", "y": "t", "domain": [0, 1]}})j",
         ErrorKind::Format},
        {R"j({"schema_version": 1, "type": "analytic",
             "analytic": {"x": "t", "y": "t", "z": "t", "domain": [1, 0]}})j",
         ErrorKind::Format},
        {R"j({"schema_version": 1, "type": "sampled", "sampled": {"t": [0, 1], "points": [[0, 0, 0]]}})j",
         ErrorKind::Format},
        // Expression errors keep their own kind.
        {R"j({"schema_version": 1, "type": "analytic",
             "analytic": {"x": "foo(t)", "y": "t", "z": "t", "domain": [0, 1]}})j",
         ErrorKind::UnknownFunction},
    };
    for (const auto& [doc, kind] : cases) EXPECT_EQ(read_error(doc), kind) << doc;
}

TEST(CurveFile, GeneratorCountMustMatch)
{
    ojson g = curve_to_json(bkt::generated_pair("cap").gen.curve);
    g["generator"]["n"] = 17;
    EXPECT_EQ(read_error(g.dump()), ErrorKind::Format);
}

TEST(Presets, AllNamesResolve)
{
    for (const auto& name : preset_names()) {
        const auto p = sphere_preset(name);
        ASSERT_TRUE(p.has_value()) << name;
        const Domain d = p->curve.domain();
        for (double t : uniform_grid(d, 11)) EXPECT_NEAR(norm(p->curve.point(t)), 1.0, 1e-14) << name;
    }
    EXPECT_FALSE(sphere_preset("nope").has_value());
}

TEST(ExitCodes, Mapping)
{
    EXPECT_EQ(exit_code_for(ErrorKind::Syntax), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::Format), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::Io), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::OutOfDomain), 3);
    EXPECT_EQ(exit_code_for(ErrorKind::Singular), 4);
    EXPECT_EQ(exit_code_for(ErrorKind::DegenerateRatio), 5);
    EXPECT_EQ(exit_code_for(ErrorKind::NotAPair), 6);
    EXPECT_EQ(exit_code_for(ErrorKind::DegenerateSphereCurve), 8);
    EXPECT_EQ(exit_code_for(ErrorKind::NonConvergent), 1);
}

TEST(Commands, ToleranceOverrideParsing)
{
    const auto [id, v] = parse_tolerance_override("th2=1e-9");
    EXPECT_EQ(id, "th2");
    EXPECT_EQ(v, 1e-9);
    EXPECT_THROW(parse_tolerance_override("th2"), Error);
    EXPECT_THROW(parse_tolerance_override("th2=abc"), Error);
}
