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
#include <numbers>

#include <gtest/gtest.h>

#include "bertrand_kit/error.hpp"
#include "bertrand_kit/expr.hpp"
#include "mini_eval.hpp"
#include "support.hpp"

using namespace bk;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::Io;
}

} // namespace

TEST(Parse, ProductOfConstantAndCall)
{
    const Expr e = parse_expression("3*cos(t)");
    const Expr want = make_binary(BinaryOp::Mul, make_constant(3), make_unary(UnaryOp::Cos, make_variable()));
    EXPECT_TRUE(structurally_equal(e, want));
}

TEST(Parse, PowerBindsTighterThanSum)
{
    const Expr e = parse_expression("t^2 + t^3");
    const Expr want = make_binary(BinaryOp::Add, make_binary(BinaryOp::PowConst, make_variable(), make_constant(2)),
                                  make_binary(BinaryOp::PowConst, make_variable(), make_constant(3)));
    EXPECT_TRUE(structurally_equal(e, want));
}

TEST(Parse, UnaryMinusBelowPower)
{
    EXPECT_DOUBLE_EQ(evaluate(parse_expression("-t^2"), 3.0), -9.0);
    EXPECT_DOUBLE_EQ(evaluate(parse_expression("2^-1 + 0*t"), 0.0), 0.5);
    EXPECT_DOUBLE_EQ(evaluate(parse_expression("1 - -2"), 0.0), 3.0);
}

TEST(Parse, QuotientAgreesWithIndependentEvaluator)
{
    const std::string text = "sin(t)/(1+cos(t)^2)";
    const Expr e = parse_expression(text);
    EXPECT_EQ(evaluate(e, 0.0), 0.0);
    bkt::ExprGenerator rng(11);
    for (int i = 0; i < 100; ++i) {
        const double t = rng.uniform(-3.0, 3.0);
        EXPECT_NEAR(evaluate(e, t), bkt::mini_eval(text, t), 1e-15) << "t=" << t;
    }
}

TEST(Parse, Errors)
{
    try {
        parse_expression("3*");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Syntax);
        EXPECT_EQ(e.position, 2u);
        EXPECT_FALSE(e.expected.empty());
    }
    try {
        parse_expression("foo(t)");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownFunction);
        EXPECT_EQ(e.name, "foo");
    }
    EXPECT_EQ(kind_of([] { parse_expression("t^t"); }), ErrorKind::NonConstantExponent);
    EXPECT_EQ(kind_of([] { parse_expression("(t"); }), ErrorKind::Syntax);
    EXPECT_EQ(kind_of([] { parse_expression(""); }), ErrorKind::Syntax);
}

TEST(Parse, RoundTripOnRandomTrees)
{
    bkt::ExprGenerator gen(5);
    for (int i = 0; i < 300; ++i) {
        const Expr e = parse_expression(gen.make(1 + i % 5));
        const std::string printed = to_string(e);
        const Expr back = parse_expression(printed);
        EXPECT_TRUE(structurally_equal(e, back)) << printed;
        EXPECT_EQ(to_string(back), printed);
    }
}

TEST(Jet, Identity)
{
    const Jet j = evaluate_jet(parse_expression("t"), 2.0, 3);
    ASSERT_EQ(j.order(), 3);
    EXPECT_EQ(j[0], 2.0);
    EXPECT_EQ(j[1], 1.0);
    EXPECT_EQ(j[2], 0.0);
    EXPECT_EQ(j[3], 0.0);
}

TEST(Jet, SineMaclaurin)
{
    const Jet j = evaluate_jet(parse_expression("sin(t)"), 0.0, 3);
    EXPECT_NEAR(j[0], 0.0, 1e-16);
    EXPECT_NEAR(j[1], 1.0, 1e-16);
    EXPECT_NEAR(j[2], 0.0, 1e-16);
    EXPECT_NEAR(j[3], -1.0 / 6.0, 1e-16);
}

TEST(Jet, ExpSinAgainstRichardson)
{
    const std::string text = "exp(t)*sin(t)";
    const Jet j = evaluate_jet(parse_expression(text), 0.7, 5);
    auto f = [&](long double t) { return bkt::mini_eval_ld(text, t); };
    double fact = 1.0;
    for (int k = 1; k <= 5; ++k) {
        fact *= k;
        const double fd = static_cast<double>(bkt::richardson_derivative(f, 0.7L, k, k <= 2 ? 1e-2L : 2e-2L));
        EXPECT_LT(bkt::rel(j[k] * fact, fd), 1e-6) << "k=" << k;
    }
}

TEST(Jet, ErrorsAtPolesAndOrderLimit)
{
    EXPECT_EQ(kind_of([] { evaluate_jet(parse_expression("log(t)"), -1.0, 2); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([] { evaluate_jet(parse_expression("sqrt(t)"), -1.0, 0); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([] { evaluate_jet(parse_expression("tan(t)"), std::numbers::pi / 2, 1); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([] { evaluate_jet(parse_expression("t"), 0.0, 9); }), ErrorKind::OrderOverflow);
}

// Properties over random trees.

TEST(JetProperty, ValueMatchesPlainEvaluation)
{
    bkt::ExprGenerator gen(21);
    for (int i = 0; i < 400; ++i) {
        const Expr e = parse_expression(gen.make(1 + i % 5));
        const double t = gen.uniform(-1.0, 1.0);
        const Jet j = evaluate_jet(e, t, 6);
        const double v = evaluate(e, t);
        EXPECT_LE(std::fabs(j[0] - v), 1e-12 * std::max(1.0, std::fabs(v))) << to_string(e);
    }
}

TEST(JetProperty, ProductIsCauchyConvolution)
{
    bkt::ExprGenerator gen(22);
    for (int i = 0; i < 200; ++i) {
        const std::string a = gen.make(1 + i % 4), b = gen.make(1 + (i + 2) % 4);
        const double t = gen.uniform(-1.0, 1.0);
        const int K = 8;
        const Jet ja = evaluate_jet(parse_expression(a), t, K);
        const Jet jb = evaluate_jet(parse_expression(b), t, K);
        const Jet jab = evaluate_jet(parse_expression("(" + a + ")*(" + b + ")"), t, K);
        for (int k = 0; k <= K; ++k) {
            double conv = 0.0, mag = 0.0;
            for (int m = 0; m <= k; ++m) {
                conv += ja[m] * jb[k - m];
                mag += std::fabs(ja[m] * jb[k - m]);
            }
            EXPECT_LE(std::fabs(jab[k] - conv), 1e-14 * std::max(mag, 1e-300)) << "k=" << k;
        }
    }
}

TEST(JetProperty, ShiftConsistency)
{
    bkt::ExprGenerator gen(23);
    for (int i = 0; i < 200; ++i) {
        const Expr e = parse_expression(gen.make(1 + i % 4));
        const double t = gen.uniform(-0.8, 0.8);
        const double h = gen.uniform(-1e-2, 1e-2);
        const Jet j = evaluate_jet(e, t, 8);
        const double there = evaluate_jet(e, t + h, 0)[0];
        EXPECT_NEAR(j.evaluate_at_offset(h), there, 1e-8 * std::max(1.0, std::fabs(there))) << to_string(e);
    }
}

TEST(JetProperty, DerivativesAgainstRichardson)
{
    bkt::ExprGenerator gen(24);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const std::string text = gen.make(1 + i % 3);
        const Expr e = parse_expression(text);
        const double t = gen.uniform(-0.8, 0.8);
        const Jet j = evaluate_jet(e, t, 4);
        // Oracle: the independent evaluator in extended precision.
        auto f = [&](long double x) { return bkt::mini_eval_ld(text, x); };
        double fact = 1.0;
        for (int k = 1; k <= 4; ++k) {
            fact *= k;
            const double fd =
                static_cast<double>(bkt::richardson_derivative(f, static_cast<long double>(t), k, k <= 2 ? 1e-2L : 2e-2L));
            const double scale = std::max(std::fabs(fd), 1e-2 * std::max(1.0, std::fabs(j[0])));
            EXPECT_LE(std::fabs(j[k] * fact - fd), 1e-6 * scale) << to_string(e) << " k=" << k;
            ++checked;
        }
    }
    EXPECT_EQ(checked, 800);
}
