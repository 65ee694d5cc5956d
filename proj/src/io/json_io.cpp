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

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bertrand_kit/bertrand.hpp"
#include "bertrand_kit/error.hpp"
#include "bertrand_kit/io.hpp"

namespace bk {

std::string format_real(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

bool is_scalar(const ojson& j) { return !j.is_object() && !j.is_array(); }

void emit(const ojson& j, int indent, std::string& out)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case ojson::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += inner;
            out += ojson(it.key()).dump();
            out += ": ";
            emit(it.value(), indent + 1, out);
        }
        out += "\n" + pad + "}";
        return;
    }
    case ojson::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool flat = j.size() <= 32;
        for (const auto& e : j) flat = flat && is_scalar(e);
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ", ";
                emit(j[i], indent + 1, out);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += inner;
            emit(j[i], indent + 1, out);
        }
        out += "\n" + pad + "]";
        return;
    }
    case ojson::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_real(v) : "null";
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

} // namespace

std::string dump_json(const ojson& j)
{
    std::string out;
    emit(j, 0, out);
    out += '\n';
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h)
{
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write " + path);
    out << text;
    if (!out) fail(ErrorKind::Io, "write failed for " + path);
}

ojson masked_to_json(const std::vector<MaskedInterval>& m)
{
    ojson arr = ojson::array();
    for (const auto& iv : m) {
        ojson o;
        o["lo"] = iv.lo;
        o["hi"] = iv.hi;
        o["points"] = iv.points;
        o["reason"] = iv.reason;
        arr.push_back(o);
    }
    return arr;
}

std::string csv_header(const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s + "\n";
}

std::string csv_line(const std::vector<double>& row)
{
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_real(row[i]);
    return s + "\n";
}

// Curve files

namespace {

ojson origin_to_json(const CurveOrigin& o)
{
    ojson g;
    switch (o.kind) {
    case CurveOrigin::Kind::BertrandGenerator:
        g["kind"] = "bertrand-generator";
        g["a"] = o.a;
        g["omega"] = o.omega;
        g["lambda_nominal"] = o.lambda;
        break;
    case CurveOrigin::Kind::NormalOffset:
        g["kind"] = "normal-offset";
        g["lambda"] = o.lambda;
        break;
    case CurveOrigin::Kind::Perturbation: {
        g["kind"] = "perturbation";
        ojson d = ojson::array();
        for (const auto& e : o.delta) d.push_back(to_string(e));
        g["delta"] = d;
        break;
    }
    }
    g["parent"] = curve_to_json(*o.parent);
    return g;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::Format, "curve file: " + what); }

const nlohmann::json& member(const nlohmann::json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double real_of(const nlohmann::json& j, const char* what)
{
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) bad(std::string(what) + " must be finite");
    return v;
}

std::string string_of(const nlohmann::json& j, const char* what)
{
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace

ojson curve_to_json(const Curve& c)
{
    ojson j;
    j["schema_version"] = kCurveSchemaVersion;
    j["label"] = c.label();
    if (c.kind() == CurveKind::Analytic) {
        j["type"] = "analytic";
        const auto& e = c.expressions();
        ojson a;
        a["x"] = to_string(e[0]);
        a["y"] = to_string(e[1]);
        a["z"] = to_string(e[2]);
        const Domain d = c.domain();
        a["domain"] = ojson::array({d.lo, d.hi});
        j["analytic"] = a;
        return j;
    }
    j["type"] = "sampled";
    ojson s;
    ojson t = ojson::array();
    for (double v : c.params()) t.push_back(v);
    ojson p = ojson::array();
    for (const Vec3& q : c.points()) p.push_back(ojson::array({q[0], q[1], q[2]}));
    s["t"] = t;
    s["points"] = p;
    j["sampled"] = s;
    if (c.origin()) {
        ojson g = origin_to_json(*c.origin());
        if (c.origin()->kind == CurveOrigin::Kind::BertrandGenerator) {
            // n sits before the parent for readability
            ojson h;
            for (auto it = g.begin(); it != g.end(); ++it) {
                if (it.key() == "parent") h["n"] = static_cast<std::int64_t>(c.params().size());
                h[it.key()] = it.value();
            }
            g = h;
        }
        j["generator"] = g;
    }
    return j;
}

Curve curve_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) bad("document must be an object");
    const auto& ver = member(j, "schema_version");
    if (!ver.is_number_integer() || ver.get<int>() != kCurveSchemaVersion)
        bad("unsupported schema_version (expected 1)");
    const std::string label = j.contains("label") ? string_of(j.at("label"), "label") : std::string();
    const std::string type = string_of(member(j, "type"), "type");
    const bool has_a = j.contains("analytic");
    const bool has_s = j.contains("sampled");
    if (has_a == has_s) bad("exactly one of \"analytic\" and \"sampled\" must be present");

    if (type == "analytic") {
        if (!has_a) bad("type analytic without an \"analytic\" block");
        if (j.contains("generator")) bad("analytic curves carry no generator block");
        const auto& a = j.at("analytic");
        const auto& dom = member(a, "domain");
        if (!dom.is_array() || dom.size() != 2) bad("domain must be [lo, hi]");
        const Domain d{real_of(dom[0], "domain"), real_of(dom[1], "domain")};
        if (!(d.lo < d.hi)) bad("domain must satisfy lo < hi");
        return Curve::analytic(string_of(member(a, "x"), "x"), string_of(member(a, "y"), "y"),
                               string_of(member(a, "z"), "z"), d, label);
    }
    if (type != "sampled") bad("type must be \"analytic\" or \"sampled\"");
    if (!has_s) bad("type sampled without a \"sampled\" block");
    const auto& s = j.at("sampled");
    const auto& tj = member(s, "t");
    const auto& pj = member(s, "points");
    if (!tj.is_array() || !pj.is_array()) bad("t and points must be arrays");
    if (tj.size() != pj.size()) bad("t and points differ in length");
    std::vector<double> t;
    std::vector<Vec3> p;
    t.reserve(tj.size());
    p.reserve(pj.size());
    for (const auto& v : tj) t.push_back(real_of(v, "t"));
    for (const auto& q : pj) {
        if (!q.is_array() || q.size() != 3) bad("each point must have three coordinates");
        p.push_back({real_of(q[0], "point"), real_of(q[1], "point"), real_of(q[2], "point")});
    }
    if (!j.contains("generator")) return Curve::sampled(std::move(t), std::move(p), label);

    const auto& g = j.at("generator");
    const std::string kind = string_of(member(g, "kind"), "generator kind");
    CurveOrigin o;
    if (kind == "bertrand-generator") {
        o.kind = CurveOrigin::Kind::BertrandGenerator;
        o.a = real_of(member(g, "a"), "a");
        o.omega = real_of(member(g, "omega"), "omega");
        o.lambda = real_of(member(g, "lambda_nominal"), "lambda_nominal");
        if (g.contains("n") && (!g.at("n").is_number_integer() || g.at("n").get<std::int64_t>() !=
                                                                     static_cast<std::int64_t>(t.size())))
            bad("generator n disagrees with the sample count");
    } else if (kind == "normal-offset") {
        o.kind = CurveOrigin::Kind::NormalOffset;
        o.lambda = real_of(member(g, "lambda"), "lambda");
    } else if (kind == "perturbation") {
        o.kind = CurveOrigin::Kind::Perturbation;
        const auto& d = member(g, "delta");
        if (!d.is_array() || d.size() != 3) bad("delta must hold three expressions");
        for (std::size_t i = 0; i < 3; ++i) o.delta[i] = parse_expression(string_of(d[i], "delta"));
    } else {
        bad("unknown generator kind \"" + kind + "\"");
    }
    o.parent = std::make_shared<const Curve>(curve_from_json(member(g, "parent")));
    const Domain pd = o.parent->domain();
    if (t.front() < pd.lo || t.back() > pd.hi) bad("samples extend beyond the parent domain");
    // Validate the samples the same way plain sampled curves are.
    (void)Curve::sampled(t, p);
    return rebuild_derived(o, std::move(t), std::move(p), label);
}

std::string write_curve(const Curve& c) { return dump_json(curve_to_json(c)); }

Curve read_curve(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::Format, std::string("curve file is not valid JSON: ") + e.what());
    }
    return curve_from_json(j);
}

Curve load_curve_file(const std::string& path) { return read_curve(read_text_file(path)); }

} // namespace bk
