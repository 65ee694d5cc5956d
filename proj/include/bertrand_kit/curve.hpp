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

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "bertrand_kit/expr.hpp"
#include "bertrand_kit/jet.hpp"
#include "bertrand_kit/vec3.hpp"

namespace bk {

struct Domain {
    double lo = 0.0;
    double hi = 0.0;
    double span() const { return hi - lo; }
};

/// Evaluator behind a curve. Implementations must be immutable and
/// thread safe.
class CurveImpl {
public:
    virtual ~CurveImpl() = default;
    virtual Domain domain() const = 0;
    virtual JetVec3 jets(double t, int order) const = 0;
    /// Jets of the velocity. Override when the derivative is cheaper than
    /// the position.
    virtual JetVec3 derivative_jets(double t, int order) const { return jets(t, order + 1).differentiate(); }
};

enum class CurveKind { Analytic, Sampled };

class Curve;

/// Recipe of a sampled curve that was produced by the library. It lets a
/// curve file carry enough information to rebuild exact derivatives.
struct CurveOrigin {
    enum class Kind { BertrandGenerator, NormalOffset, Perturbation };
    Kind kind = Kind::NormalOffset;
    std::shared_ptr<const Curve> parent;
    double a = 0.0;
    double omega = 0.0;
    double lambda = 0.0;
    std::array<Expr, 3> delta;
};

class Curve {
public:
    Curve() = default;

    static Curve analytic(Expr x, Expr y, Expr z, Domain d, std::string label = {});
    static Curve analytic(const std::string& x, const std::string& y, const std::string& z, Domain d,
                          std::string label = {});

    /// Tabulated curve; derivatives from 7-point stencils.
    static Curve sampled(std::vector<double> t, std::vector<Vec3> points, std::string label = {});

    /// Tabulated curve whose derivatives come from an exact evaluator.
    static Curve derived(std::vector<double> t, std::vector<Vec3> points,
                         std::shared_ptr<const CurveImpl> exact, CurveOrigin origin,
                         std::string label = {});

    bool valid() const { return impl_ != nullptr; }
    CurveKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    Curve with_label(std::string label) const;
    Domain domain() const;

    /// Component jets at t. Throws OutOfDomain outside the domain.
    JetVec3 jets(double t, int order) const;
    /// Velocity jets at t through the given order.
    JetVec3 derivative_jets(double t, int order) const;
    Vec3 point(double t) const;

    const std::array<Expr, 3>& expressions() const;
    const std::vector<double>& params() const;
    const std::vector<Vec3>& points() const;
    const CurveOrigin* origin() const { return origin_.get(); }

    /// Same samples with the exact evaluator dropped, so derivatives come
    /// from stencils.
    Curve samples_only() const;

private:
    std::shared_ptr<const CurveImpl> impl_;
    CurveKind kind_ = CurveKind::Analytic;
    std::string label_;
    std::array<Expr, 3> exprs_;
    std::shared_ptr<const std::vector<double>> t_;
    std::shared_ptr<const std::vector<Vec3>> pts_;
    std::shared_ptr<const CurveOrigin> origin_;
};

/// Finite-difference weights (Fornberg) for derivatives 0..m at x0.
/// Result is indexed [node][derivative].
std::vector<std::array<double, 8>> fornberg_weights(double x0, const double* x, int n, int m);

/// Jets of a tabulated curve at t from the 7 nearest nodes.
JetVec3 stencil_jets(const std::vector<double>& t, const std::vector<Vec3>& pts, double x, int order);

/// Uniform grid of n points covering [lo, hi].
std::vector<double> uniform_grid(Domain d, int n);

/// Length of the arc between t0 and t1 (adaptive Gauss-Kronrod, absolute
/// tolerance 1e-10 for arcs of moderate length).
double arc_length(const Curve& c, double t0, double t1);

double speed_at(const Curve& c, double t);

/// Rows (t_i, s_i) on a uniform grid, with monotone cubic interpolation
/// in both directions.
class ArcLengthTable {
public:
    ArcLengthTable() = default;
    ArcLengthTable(std::vector<double> t, std::vector<double> s, std::vector<double> speed);

    const std::vector<double>& t() const { return t_; }
    const std::vector<double>& s() const { return s_; }
    double total() const { return s_.empty() ? 0.0 : s_.back(); }

    double s_of_t(double t) const;
    double t_of_s(double s) const;

private:
    struct Interp;
    std::vector<double> t_, s_;
    std::shared_ptr<const Interp> interp_;
};

ArcLengthTable build_arclength_table(const Curve& c, int n);

} // namespace bk
