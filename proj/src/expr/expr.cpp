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

#include <charconv>
#include <cmath>
#include <string>

#include "bertrand_kit/error.hpp"
#include "bertrand_kit/expr.hpp"

namespace bk {

Expr make_constant(double v)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Constant;
    n->value = v;
    return n;
}

Expr make_variable()
{
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Variable;
    return n;
}

Expr make_unary(UnaryOp op, Expr child)
{
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Unary;
    n->uop = op;
    n->left = std::move(child);
    return n;
}

Expr make_binary(BinaryOp op, Expr l, Expr r)
{
    if (op == BinaryOp::PowConst && (!r || r->kind != NodeKind::Constant))
        fail(ErrorKind::NonConstantExponent, "power exponent must be a constant");
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::Binary;
    n->bop = op;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

const char* unary_name(UnaryOp op)
{
    switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Tan: return "tan";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Log: return "log";
    case UnaryOp::Sqrt: return "sqrt";
    }
    return "?";
}

namespace {

int precedence(const Expr& e)
{
    switch (e->kind) {
    case NodeKind::Constant: return e->value < 0 ? 3 : 5;
    case NodeKind::Variable: return 5;
    case NodeKind::Unary: return e->uop == UnaryOp::Neg ? 3 : 5;
    case NodeKind::Binary:
        switch (e->bop) {
        case BinaryOp::Add:
        case BinaryOp::Sub: return 1;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 2;
        case BinaryOp::PowConst: return 4;
        }
    }
    return 0;
}

std::string number(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void print(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out)
{
    if (wrap) out += '(';
    print(e, out);
    if (wrap) out += ')';
}

void print(const Expr& e, std::string& out)
{
    switch (e->kind) {
    case NodeKind::Constant: out += number(e->value); return;
    case NodeKind::Variable: out += 't'; return;
    case NodeKind::Unary:
        if (e->uop == UnaryOp::Neg) {
            out += '-';
            print_wrapped(e->left, precedence(e->left) < 3, out);
        } else {
            out += unary_name(e->uop);
            out += '(';
            print(e->left, out);
            out += ')';
        }
        return;
    case NodeKind::Binary: {
        const int p = precedence(e);
        if (e->bop == BinaryOp::PowConst) {
            print_wrapped(e->left, precedence(e->left) < 5, out);
            out += '^';
            const double x = e->right->value;
            out += x < 0 ? "(" + number(x) + ")" : number(x);
            return;
        }
        print_wrapped(e->left, precedence(e->left) < p, out);
        switch (e->bop) {
        case BinaryOp::Add: out += " + "; break;
        case BinaryOp::Sub: out += " - "; break;
        case BinaryOp::Mul: out += '*'; break;
        case BinaryOp::Div: out += '/'; break;
        case BinaryOp::PowConst: break;
        }
        print_wrapped(e->right, precedence(e->right) <= p, out);
        return;
    }
    }
}

double checked_log(double x)
{
    if (!(x > 0.0)) fail(ErrorKind::Domain, "log of non-positive value " + std::to_string(x));
    return std::log(x);
}

double checked_sqrt(double x)
{
    if (!(x >= 0.0)) fail(ErrorKind::Domain, "sqrt of negative value " + std::to_string(x));
    return std::sqrt(x);
}

double checked_tan(double x)
{
    if (std::fabs(std::cos(x)) < 1e-12) fail(ErrorKind::Domain, "tan pole at " + std::to_string(x));
    return std::tan(x);
}

double checked_pow(double x, double p)
{
    const bool integral = std::floor(p) == p;
    if (!integral && x < 0.0) fail(ErrorKind::Domain, "non-integer power of negative value");
    if (p < 0.0 && x == 0.0) fail(ErrorKind::Domain, "negative power of zero");
    return std::pow(x, p);
}

Jet jet_of(const Expr& e, double t0, int order)
{
    switch (e->kind) {
    case NodeKind::Constant: return Jet(order, e->value);
    case NodeKind::Variable: return Jet::variable(t0, order);
    case NodeKind::Unary: {
        const Jet a = jet_of(e->left, t0, order);
        switch (e->uop) {
        case UnaryOp::Neg: return -a;
        case UnaryOp::Sin: return sin(a);
        case UnaryOp::Cos: return cos(a);
        case UnaryOp::Tan: return tan(a);
        case UnaryOp::Exp: return exp(a);
        case UnaryOp::Log: return log(a);
        case UnaryOp::Sqrt:
            if (!(a.value() > 0.0) && order > 0)
                fail(ErrorKind::Domain, "sqrt argument not positive at t=" + std::to_string(t0));
            return sqrt(a);
        }
        break;
    }
    case NodeKind::Binary: {
        const Jet a = jet_of(e->left, t0, order);
        if (e->bop == BinaryOp::PowConst) {
            const double p = e->right->value;
            if (p < 0.0 && a.value() == 0.0) fail(ErrorKind::Domain, "negative power of zero");
            return pow(a, p);
        }
        const Jet b = jet_of(e->right, t0, order);
        switch (e->bop) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div: return a / b;
        case BinaryOp::PowConst: break;
        }
        break;
    }
    }
    fail(ErrorKind::InvalidArgument, "malformed expression node");
}

} // namespace

std::string to_string(const Expr& e)
{
    std::string out;
    print(e, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b)
{
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case NodeKind::Constant: return a->value == b->value;
    case NodeKind::Variable: return true;
    case NodeKind::Unary: return a->uop == b->uop && structurally_equal(a->left, b->left);
    case NodeKind::Binary:
        return a->bop == b->bop && structurally_equal(a->left, b->left) &&
               structurally_equal(a->right, b->right);
    }
    return false;
}

double evaluate(const Expr& e, double t)
{
    switch (e->kind) {
    case NodeKind::Constant: return e->value;
    case NodeKind::Variable: return t;
    case NodeKind::Unary: {
        const double a = evaluate(e->left, t);
        switch (e->uop) {
        case UnaryOp::Neg: return -a;
        case UnaryOp::Sin: return std::sin(a);
        case UnaryOp::Cos: return std::cos(a);
        case UnaryOp::Tan: return checked_tan(a);
        case UnaryOp::Exp: return std::exp(a);
        case UnaryOp::Log: return checked_log(a);
        case UnaryOp::Sqrt: return checked_sqrt(a);
        }
        break;
    }
    case NodeKind::Binary: {
        const double a = evaluate(e->left, t);
        const double b = evaluate(e->right, t);
        switch (e->bop) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div:
            if (b == 0.0) fail(ErrorKind::Domain, "division by zero");
            return a / b;
        case BinaryOp::PowConst: return checked_pow(a, b);
        }
        break;
    }
    }
    fail(ErrorKind::InvalidArgument, "malformed expression node");
}

Jet evaluate_jet(const Expr& e, double t0, int order, int max_order)
{
    if (order < 0) fail(ErrorKind::InvalidArgument, "negative jet order");
    if (max_order > kJetCapacity) max_order = kJetCapacity;
    if (order > max_order)
        fail(ErrorKind::OrderOverflow,
             "jet order " + std::to_string(order) + " exceeds maximum " + std::to_string(max_order));
    return jet_of(e, t0, order);
}

} // namespace bk
