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

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <system_error>
#include <vector>

#include "bertrand_kit/error.hpp"
#include "bertrand_kit/expr.hpp"

namespace bk {

namespace {

struct FunctionEntry {
    const char* name;
    UnaryOp op;
};

constexpr FunctionEntry kFunctions[] = {
    {"sin", UnaryOp::Sin}, {"cos", UnaryOp::Cos},   {"tan", UnaryOp::Tan},
    {"exp", UnaryOp::Exp}, {"log", UnaryOp::Log},   {"sqrt", UnaryOp::Sqrt},
};

bool depends_on_variable(const Expr& e)
{
    if (!e) return false;
    if (e->kind == NodeKind::Variable) return true;
    return depends_on_variable(e->left) || depends_on_variable(e->right);
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Expr parse()
    {
        skip_ws();
        if (pos_ >= s_.size()) syntax({"number", "t", "pi", "function", "(", "-"});
        Expr e = parse_sum();
        skip_ws();
        if (pos_ < s_.size()) syntax({"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void syntax(std::vector<std::string> expected)
    {
        std::string msg = "syntax error at position " + std::to_string(pos_) + ": expected one of {";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += ", ";
            msg += expected[i];
        }
        msg += "}";
        if (pos_ < s_.size()) msg += std::string(", found '") + s_[pos_] + "'";
        Error err(ErrorKind::Syntax, msg);
        err.position = pos_;
        err.expected = std::move(expected);
        throw err;
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr parse_sum()
    {
        Expr lhs = parse_product();
        for (;;) {
            if (accept('+')) lhs = make_binary(BinaryOp::Add, lhs, parse_product());
            else if (accept('-')) lhs = make_binary(BinaryOp::Sub, lhs, parse_product());
            else return lhs;
        }
    }

    Expr parse_product()
    {
        Expr lhs = parse_unary();
        for (;;) {
            if (accept('*')) lhs = make_binary(BinaryOp::Mul, lhs, parse_unary());
            else if (accept('/')) lhs = make_binary(BinaryOp::Div, lhs, parse_unary());
            else return lhs;
        }
    }

    Expr parse_unary()
    {
        if (accept('-')) return make_unary(UnaryOp::Neg, parse_unary());
        return parse_power();
    }

    Expr parse_power()
    {
        Expr base = parse_primary();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        Expr exponent = parse_unary();
        if (depends_on_variable(exponent)) {
            Error err(ErrorKind::NonConstantExponent,
                      "exponent at position " + std::to_string(at) + " depends on t");
            err.position = at;
            throw err;
        }
        return make_binary(BinaryOp::PowConst, base, make_constant(evaluate(exponent, 0.0)));
    }

    Expr parse_primary()
    {
        skip_ws();
        if (pos_ >= s_.size()) syntax({"number", "t", "pi", "function", "(", "-"});
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            if (!accept(')')) syntax({")", "+", "-", "*", "/", "^"});
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        syntax({"number", "t", "pi", "function", "(", "-"});
    }

    Expr parse_number()
    {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mant = digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            mant += digits();
        }
        if (mant == 0) {
            pos_ = start;
            syntax({"number"});
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (digits() == 0) syntax({"exponent digits"});
        }
        double v = 0.0;
        const char* first = s_.data() + start;
        const char* last = s_.data() + pos_;
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
            pos_ = start;
            syntax({"finite number"});
        }
        return make_constant(v);
    }

    Expr parse_identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string name(s_.substr(start, pos_ - start));
        const std::size_t after = pos_;
        skip_ws();
        const bool call = pos_ < s_.size() && s_[pos_] == '(';
        if (!call) {
            pos_ = after;
            if (name == "t") return make_variable();
            if (name == "pi") return make_constant(std::numbers::pi);
            pos_ = start;
            syntax({"number", "t", "pi", "function", "(", "-"});
        }
        for (const auto& f : kFunctions) {
            if (name == f.name) {
                ++pos_;
                Expr arg = parse_sum();
                if (!accept(')')) syntax({")", "+", "-", "*", "/", "^"});
                return make_unary(f.op, arg);
            }
        }
        Error err(ErrorKind::UnknownFunction, "unknown function '" + name + "'");
        err.position = start;
        err.name = name;
        throw err;
    }
};

} // namespace

Expr parse_expression(std::string_view text)
{
    Parser p(text);
    return p.parse();
}

} // namespace bk
