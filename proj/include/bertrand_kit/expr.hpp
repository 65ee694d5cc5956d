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

#include <memory>
#include <string>
#include <string_view>

#include "bertrand_kit/jet.hpp"

namespace bk {

enum class NodeKind { Constant, Variable, Unary, Binary };
enum class UnaryOp { Neg, Sin, Cos, Tan, Exp, Log, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div, PowConst };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/// Immutable AST node. For PowConst the right child is always a Constant.
struct ExprNode {
    NodeKind kind = NodeKind::Constant;
    double value = 0.0;
    UnaryOp uop = UnaryOp::Neg;
    BinaryOp bop = BinaryOp::Add;
    Expr left;
    Expr right;
};

Expr make_constant(double v);
Expr make_variable();
Expr make_unary(UnaryOp op, Expr child);
Expr make_binary(BinaryOp op, Expr l, Expr r);

/// Grammar: + - < * / < unary minus < ^ ; calls sin cos tan exp log sqrt;
/// the variable t; the constant pi; literals with optional exponent.
Expr parse_expression(std::string_view text);

/// Canonical infix form; parsing it yields a structurally equal tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// Plain double evaluation with the same domain rules as the jet path.
double evaluate(const Expr& e, double t);

/// Taylor coefficients of e about t0 through the given order.
Jet evaluate_jet(const Expr& e, double t0, int order, int max_order = kDefaultMaxOrder);

const char* unary_name(UnaryOp op);

} // namespace bk
