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

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "bertrand_kit/bertrand.hpp"
#include "bertrand_kit/io.hpp"

namespace bkt {

inline bk::Curve helix(double a = 3.0, double b = 4.0, bk::Domain d = {0.0, 6.0})
{
    const std::string A = bk::format_real(a), B = bk::format_real(b);
    return bk::Curve::analytic(A + "*cos(t)", A + "*sin(t)", B + "*t", d, "helix");
}

inline bk::Curve circle(double r = 1.0, bk::Domain d = {0.0, 6.0})
{
    const std::string R = bk::format_real(r);
    return bk::Curve::analytic(R + "*cos(t)", R + "*sin(t)", "0", d, "circle");
}

inline bk::Curve preset_curve(const std::string& name) { return bk::sphere_preset(name)->curve; }

/// A generated Bertrand curve, its mate at the nominal offset and the
/// detected pair. Cached per preset because generation is the slow part.
struct GeneratedPair {
    bk::GeneratedCurve gen;
    bk::Curve mate;
    bk::BertrandPairModel pair;
};

inline const GeneratedPair& generated_pair(const std::string& preset, int n = 4096)
{
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::unique_ptr<GeneratedPair>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{preset, n}];
    if (!slot) {
        const auto p = bk::sphere_preset(preset);
        auto g = std::make_unique<GeneratedPair>();
        g->gen = bk::generate_bertrand_curve(p->curve, 1.0, p->omega, n);
        g->mate = bk::construct_mate(g->gen.curve, g->gen.lambda_nominal, n).curve;
        g->pair = bk::detect_bertrand(g->gen.curve, g->mate, 512);
        slot = std::move(g);
    }
    return *slot;
}

/// k-th derivative of f at t from central differences with two levels of
/// Richardson extrapolation (error O(h^6)). Real is double or long double.
template <class Real, class F>
Real richardson_derivative(F&& f, Real t, int k, Real h)
{
    auto central = [&](Real step) {
        // sum_j (-1)^j C(k,j) f(t + (k/2 - j) step) / step^k
        Real acc = 0;
        Real binom = 1;
        for (int j = 0; j <= k; ++j) {
            acc += ((j % 2) ? -binom : binom) * f(t + (Real(0.5) * k - j) * step);
            binom = binom * (k - j) / (j + 1);
        }
        return acc / std::pow(step, k);
    };
    const Real d1 = central(h), d2 = central(h / 2), d3 = central(h / 4);
    const Real r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
    return (16 * r2 - r1) / 15;
}

/// Random smooth expressions built from pieces that stay finite and
/// well scaled on [-1, 1].
class ExprGenerator {
public:
    explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

    std::string make(int depth)
    {
        if (depth <= 0) return leaf();
        // Children are drawn before the operator is assembled so the
        // sequence of random draws does not depend on evaluation order.
        const int op = pick(9);
        const std::string a = make(depth - 1);
        const std::string b = op <= 3 ? make(depth - 1) : std::string();
        switch (op) {
        case 0: return "(" + a + " + " + b + ")";
        case 1: return "(" + a + " - " + b + ")";
        case 2: return "(" + a + ")*(" + b + ")";
        case 3: return "(" + a + ")/(2.5 + sin(" + b + "))";
        case 4: return "sin(" + a + ")";
        case 5: return "cos(" + a + ")";
        case 6: return "exp(0.3*sin(" + a + "))";
        case 7: return "sqrt(1.5 + cos(" + a + "))";
        default: return "log(2 + sin(" + a + "))";
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

private:
    std::string leaf()
    {
        char buf[64];
        switch (pick(4)) {
        case 0: return "t";
        case 1: std::snprintf(buf, sizeof buf, "%.3f", uniform(-2.0, 2.0)); return buf;
        case 2: std::snprintf(buf, sizeof buf, "%.3f*t", uniform(-1.5, 1.5)); return buf;
        default: std::snprintf(buf, sizeof buf, "(t + %.3f)^2", uniform(-1.0, 1.0)); return buf;
        }
    }

    std::mt19937_64 rng_;
};

/// |a - b| / max(|b|, floor)
inline double rel(double a, double b, double floor = 1e-300)
{
    return std::fabs(a - b) / std::max(std::fabs(b), floor);
}

} // namespace bkt
