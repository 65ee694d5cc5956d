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

#include "bertrand_kit/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bertrand_kit/error.hpp"

namespace bk {

namespace {

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

bool is_integer(double p) { return std::isfinite(p) && std::floor(p) == p && std::fabs(p) < 1e9; }

} // namespace

Jet::Jet(int order, double value) : order_(order)
{
    if (order < 0 || order > kJetCapacity)
        fail(ErrorKind::OrderOverflow, "jet order " + std::to_string(order) + " outside storage bound");
    c_[0] = value;
}

Jet::Jet(std::initializer_list<double> coeffs)
{
    if (coeffs.size() == 0 || coeffs.size() > kJetCapacity + 1)
        fail(ErrorKind::OrderOverflow, "bad coefficient count for jet");
    order_ = static_cast<int>(coeffs.size()) - 1;
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Jet Jet::variable(double t0, int order)
{
    Jet j(order, t0);
    if (order >= 1) j[1] = 1.0;
    return j;
}

double Jet::derivative(int k) const
{
    if (k < 0 || k > order_) fail(ErrorKind::OrderOverflow, "derivative beyond jet order");
    return factorial(k) * c_[static_cast<std::size_t>(k)];
}

Jet Jet::differentiate() const
{
    Jet d(std::max(order_ - 1, 0), 0.0);
    if (order_ == 0) return d;
    for (int k = 0; k < order_; ++k) d[k] = (k + 1) * c_[static_cast<std::size_t>(k + 1)];
    return d;
}

Jet Jet::truncated(int order) const
{
    Jet r(std::min(order, order_), 0.0);
    for (int k = 0; k <= r.order_; ++k) r[k] = c_[static_cast<std::size_t>(k)];
    return r;
}

double Jet::evaluate_at_offset(double h) const
{
    double v = c_[static_cast<std::size_t>(order_)];
    for (int k = order_ - 1; k >= 0; --k) v = v * h + c_[static_cast<std::size_t>(k)];
    return v;
}

Jet& Jet::operator+=(const Jet& o)
{
    *this = *this + o;
    return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
    *this = *this - o;
    return *this;
}

Jet operator+(const Jet& a, const Jet& b)
{
    Jet r(common_order(a, b), 0.0);
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b)
{
    Jet r(common_order(a, b), 0.0);
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

Jet operator-(const Jet& a)
{
    Jet r(a.order(), 0.0);
    for (int k = 0; k <= r.order(); ++k) r[k] = -a[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b)
{
    Jet r(common_order(a, b), 0.0);
    for (int k = 0; k <= r.order(); ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
        r[k] = s;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b)
{
    if (b[0] == 0.0 || !std::isfinite(b[0])) fail(ErrorKind::Domain, "division by zero in jet");
    Jet q(common_order(a, b), 0.0);
    for (int k = 0; k <= q.order(); ++k) {
        double s = a[k];
        for (int i = 0; i < k; ++i) s -= q[i] * b[k - i];
        q[k] = s / b[0];
    }
    return q;
}

Jet operator+(const Jet& a, double s)
{
    Jet r = a;
    r[0] += s;
    return r;
}
Jet operator+(double s, const Jet& a) { return a + s; }
Jet operator-(const Jet& a, double s) { return a + (-s); }
Jet operator-(double s, const Jet& a) { return (-a) + s; }

Jet operator*(const Jet& a, double s)
{
    Jet r(a.order(), 0.0);
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * s;
    return r;
}
Jet operator*(double s, const Jet& a) { return a * s; }

Jet operator/(const Jet& a, double s)
{
    if (s == 0.0) fail(ErrorKind::Domain, "division by zero in jet");
    Jet r(a.order(), 0.0);
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] / s;
    return r;
}

Jet operator/(double s, const Jet& a) { return Jet(a.order(), s) / a; }

Jet sqrt(const Jet& a)
{
    const double a0 = a[0];
    if (!(a0 > 0.0) && !(a.order() == 0 && a0 == 0.0))
        fail(ErrorKind::Domain, "sqrt of non-positive value " + std::to_string(a0));
    Jet r(a.order(), std::sqrt(a0));
    for (int k = 1; k <= a.order(); ++k) {
        double s = a[k];
        for (int i = 1; i < k; ++i) s -= r[i] * r[k - i];
        r[k] = s / (2.0 * r[0]);
    }
    return r;
}

Jet exp(const Jet& a)
{
    Jet e(a.order(), std::exp(a[0]));
    for (int k = 1; k <= a.order(); ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a[j] * e[k - j];
        e[k] = s / k;
    }
    return e;
}

Jet log(const Jet& a)
{
    if (!(a[0] > 0.0)) fail(ErrorKind::Domain, "log of non-positive value " + std::to_string(a[0]));
    Jet l(a.order(), std::log(a[0]));
    for (int k = 1; k <= a.order(); ++k) {
        double s = 0.0;
        for (int j = 1; j < k; ++j) s += j * l[j] * a[k - j];
        l[k] = (a[k] - s / k) / a[0];
    }
    return l;
}

void sincos(const Jet& a, Jet& s, Jet& c)
{
    s = Jet(a.order(), std::sin(a[0]));
    c = Jet(a.order(), std::cos(a[0]));
    for (int k = 1; k <= a.order(); ++k) {
        double ss = 0.0;
        double cc = 0.0;
        for (int j = 1; j <= k; ++j) {
            ss += j * a[j] * c[k - j];
            cc += j * a[j] * s[k - j];
        }
        s[k] = ss / k;
        c[k] = -cc / k;
    }
}

Jet sin(const Jet& a)
{
    Jet s, c;
    sincos(a, s, c);
    return s;
}

Jet cos(const Jet& a)
{
    Jet s, c;
    sincos(a, s, c);
    return c;
}

Jet tan(const Jet& a)
{
    Jet s, c;
    sincos(a, s, c);
    if (std::fabs(c[0]) < 1e-12) fail(ErrorKind::Domain, "tan pole at " + std::to_string(a[0]));
    return s / c;
}

Jet pow(const Jet& a, double p)
{
    if (p == 0.0) return Jet(a.order(), 1.0);
    if (is_integer(p)) {
        // Repeated squaring keeps integer powers valid at and below zero.
        long long n = static_cast<long long>(std::fabs(p));
        Jet base = a;
        Jet r(a.order(), 1.0);
        while (n > 0) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return p < 0 ? 1.0 / r : r;
    }
    if (!(a[0] > 0.0))
        fail(ErrorKind::Domain, "non-integer power of non-positive value " + std::to_string(a[0]));
    Jet y(a.order(), std::pow(a[0], p));
    for (int k = 1; k <= a.order(); ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += (p * j - (k - j)) * a[j] * y[k - j];
        y[k] = s / (k * a[0]);
    }
    return y;
}

int JetVec3::order() const { return std::min({x.order(), y.order(), z.order()}); }

JetVec3 operator+(const JetVec3& a, const JetVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
JetVec3 operator-(const JetVec3& a, const JetVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
JetVec3 operator*(const Jet& s, const JetVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
JetVec3 operator*(double s, const JetVec3& a) { return {s * a.x, s * a.y, s * a.z}; }

Jet dot(const JetVec3& a, const JetVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

JetVec3 cross(const JetVec3& a, const JetVec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Jet norm(const JetVec3& a) { return sqrt(dot(a, a)); }

} // namespace bk
