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

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bkt {

/// Direct text evaluator written separately from the library parser, used
/// as an oracle. Same grammar: + - below * / below unary minus below ^.
/// Instantiated with long double it gives finite differences more headroom.
template <class Real>
class MiniEval {
public:
    MiniEval(std::string text, Real t) : s_(std::move(text)), t_(t) {}

    Real run()
    {
        const Real v = sum();
        skip();
        if (i_ != s_.size()) throw std::runtime_error("trailing input");
        return v;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Real sum()
    {
        Real v = product();
        for (;;) {
            if (eat('+'))
                v += product();
            else if (eat('-'))
                v -= product();
            else
                return v;
        }
    }

    Real product()
    {
        Real v = unary();
        for (;;) {
            if (eat('*'))
                v *= unary();
            else if (eat('/'))
                v /= unary();
            else
                return v;
        }
    }

    Real unary()
    {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Real power()
    {
        const Real base = atom();
        if (eat('^')) return std::pow(base, unary());
        return base;
    }

    Real atom()
    {
        skip();
        if (eat('(')) {
            const Real v = sum();
            if (!eat(')')) throw std::runtime_error("missing )");
            return v;
        }
        if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
            char* end = nullptr;
            const Real v = static_cast<Real>(std::strtold(s_.c_str() + i_, &end));
            i_ = static_cast<std::size_t>(end - s_.c_str());
            return v;
        }
        std::string name;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) name += s_[i_++];
        if (name == "t") return t_;
        if (name == "pi") return std::numbers::pi_v<Real>;
        if (!eat('(')) throw std::runtime_error("expected call");
        const Real a = sum();
        if (!eat(')')) throw std::runtime_error("missing )");
        if (name == "sin") return std::sin(a);
        if (name == "cos") return std::cos(a);
        if (name == "tan") return std::tan(a);
        if (name == "exp") return std::exp(a);
        if (name == "log") return std::log(a);
        if (name == "sqrt") return std::sqrt(a);
        throw std::runtime_error("unknown function " + name);
    }

    std::string s_;
    Real t_;
    std::size_t i_ = 0;
};

inline double mini_eval(const std::string& text, double t) { return static_cast<double>(MiniEval<double>(text, t).run()); }

inline long double mini_eval_ld(const std::string& text, long double t) { return MiniEval<long double>(text, t).run(); }

} // namespace bkt
