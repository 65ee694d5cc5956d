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
#include <cstddef>
#include <initializer_list>

#include "bertrand_kit/vec3.hpp"

namespace bk {

/// Storage bound for jets. The user-facing limit is the configurable
/// maximum order passed to evaluate_jet, 8 unless overridden.
inline constexpr int kJetCapacity = 16;
inline constexpr int kDefaultMaxOrder = 8;

/// Truncated Taylor series c0 + c1 h + ... + cK h^K about a basepoint.
/// Binary operations truncate to the smaller order of the two operands.
class Jet {
public:
    Jet() = default;
    Jet(int order, double value);
    Jet(std::initializer_list<double> coeffs);

    static Jet constant(double value, int order) { return Jet(order, value); }
    static Jet variable(double t0, int order);

    int order() const { return order_; }
    double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    double value() const { return c_[0]; }

    /// k-th derivative, k! * c_k.
    double derivative(int k) const;

    /// Jet of the derivative, one order shorter.
    Jet differentiate() const;

    /// Same series truncated to a lower order.
    Jet truncated(int order) const;

    /// Re-expand about basepoint + h by Horner evaluation of the value.
    double evaluate_at_offset(double h) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);

private:
    int order_ = 0;
    std::array<double, kJetCapacity + 1> c_{};
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(const Jet& a, double s);
Jet operator+(double s, const Jet& a);
Jet operator-(const Jet& a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(const Jet& a, double s);
Jet operator*(double s, const Jet& a);
Jet operator/(const Jet& a, double s);
Jet operator/(double s, const Jet& a);

// Elementary functions. Domain checks throw Error(Domain).
Jet sqrt(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
void sincos(const Jet& a, Jet& s, Jet& c);
Jet tan(const Jet& a);
Jet pow(const Jet& a, double p);

/// Jet valued 3-vector, one jet per component.
struct JetVec3 {
    Jet x, y, z;

    Jet& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    const Jet& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    int order() const;
    Vec3 value() const { return {x.value(), y.value(), z.value()}; }
    Vec3 coeff(int k) const { return {x[k], y[k], z[k]}; }
    JetVec3 differentiate() const { return {x.differentiate(), y.differentiate(), z.differentiate()}; }
    JetVec3 truncated(int order) const { return {x.truncated(order), y.truncated(order), z.truncated(order)}; }
};

JetVec3 operator+(const JetVec3& a, const JetVec3& b);
JetVec3 operator-(const JetVec3& a, const JetVec3& b);
JetVec3 operator*(const Jet& s, const JetVec3& a);
JetVec3 operator*(double s, const JetVec3& a);
Jet dot(const JetVec3& a, const JetVec3& b);
JetVec3 cross(const JetVec3& a, const JetVec3& b);
Jet norm(const JetVec3& a);

} // namespace bk
