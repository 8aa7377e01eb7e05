// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/io.hpp
//! JSON body, kernel and measure specs; JSON output of bodies and reports.
//!
//! Bodies:  {"type":"polytope","vertices":[[x,y,z],...]}
//!          {"type":"ball","center":[x,y,z],"radius":r}
//!          {"type":"ellipsoid","semiaxes":[a,b,c],"rotation":[[...],[...],[...]],"center":[...]}
//!          {"type":"zonal_support","profile":<kernel>,"axis":[x,y,z]}
//! Kernels: {"builtin":"projection"|"mean_section_g2"|"segment_support"|"cap","alpha":a}
//!          {"table":{"t":[...],"value":[...]}}
//! Measures: {"atoms":[{"normal":[x,y,z],"weight":w},...]}
//---------------------------------------------------------------------------//
#pragma once

#include "measure.hpp"
#include "polytope.hpp"
#include "report.hpp"
#include "smooth.hpp"
#include "zonal.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace bmh {

using nlohmann::json;

//! Malformed or invalid input files.
class ParseError : public InputError {
  public:
    using InputError::InputError;
};

namespace detail {

template<class F>
auto with_context(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(what + ": " + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(what + ": " + e.what());
    }
}

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Vec3 vec3(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError("expected an array of three numbers");
    Vec3 v(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
    if (!v.allFinite())
        throw ParseError("coordinates must be finite");
    return v;
}

inline double number(const json& j) {
    if (!j.is_number())
        throw ParseError("expected a number");
    double x = j.get<double>();
    if (!std::isfinite(x))
        throw ParseError("expected a finite number");
    return x;
}

} // namespace detail

inline json parse_json_text(const std::string& text, const std::string& source = "input") {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline ZonalProfile parse_kernel(const json& j) {
    return detail::with_context("kernel", [&]() -> ZonalProfile {
        if (!j.is_object())
            throw ParseError("kernel spec must be an object");
        if (j.contains("builtin")) {
            std::string name = j.at("builtin").get<std::string>();
            if (name == "cap")
                return cap_kernel(detail::number(detail::require(j, "alpha")));
            return builtin_kernel(name);
        }
        if (j.contains("table")) {
            const json& tab = j.at("table");
            auto t = detail::require(tab, "t").get<std::vector<double>>();
            auto v = detail::require(tab, "value").get<std::vector<double>>();
            return tabulated_kernel(std::move(t), std::move(v));
        }
        throw ParseError("kernel spec needs 'builtin' or 'table'");
    });
}

//! \throws ParseError; fewer than four vertices is a parse error, while a
//! flat vertex set parses and is rejected later as degenerate.
inline Body parse_body(const json& j) {
    return detail::with_context("body", [&]() -> Body {
        std::string type = detail::require(j, "type").get<std::string>();
        if (type == "polytope") {
            const json& vs = detail::require(j, "vertices");
            if (!vs.is_array() || vs.size() < 4)
                throw ParseError("a polytope needs at least four vertices");
            std::vector<Vec3> pts;
            for (const auto& v : vs)
                pts.push_back(detail::vec3(v));
            return Polytope3::from_points(pts);
        }
        if (type == "ball") {
            Vec3 c = j.contains("center") ? detail::vec3(j.at("center")) : Vec3::Zero();
            return BallBody(c, detail::number(detail::require(j, "radius")));
        }
        if (type == "ellipsoid") {
            Vec3 axes = detail::vec3(detail::require(j, "semiaxes"));
            Mat3 r = Mat3::Identity();
            if (j.contains("rotation")) {
                const json& rows = j.at("rotation");
                if (!rows.is_array() || rows.size() != 3)
                    throw ParseError("rotation must be a 3x3 array");
                for (int i = 0; i < 3; ++i)
                    r.row(i) = detail::vec3(rows[i]).transpose();
                if ((r * r.transpose() - Mat3::Identity()).norm() > 1e-9 || r.determinant() < 0)
                    throw ParseError("rotation must be a proper orthogonal matrix");
            }
            Vec3 c = j.contains("center") ? detail::vec3(j.at("center")) : Vec3::Zero();
            return Ellipsoid(axes, r, c);
        }
        if (type == "zonal_support") {
            ZonalProfile f = parse_kernel(detail::require(j, "profile"));
            Vec3 axis = j.contains("axis") ? detail::vec3(j.at("axis")) : Vec3::UnitZ();
            if (axis.norm() < 1e-12)
                throw ParseError("axis must be nonzero");
            auto cert = is_support_profile(f);
            if (!cert.pass)
                throw ParseError("profile is not the support function of a body");
            return ZonalSupportBody(std::move(f), axis);
        }
        throw ParseError("unknown body type '" + type + "'");
    });
}

inline DiscreteSurfaceMeasure parse_measure(const json& j) {
    return detail::with_context("measure", [&] {
        const json& atoms = detail::require(j, "atoms");
        if (!atoms.is_array())
            throw ParseError("'atoms' must be an array");
        std::vector<Atom> out;
        for (const auto& a : atoms) {
            Vec3 n = detail::vec3(detail::require(a, "normal"));
            if (n.norm() < 1e-12)
                throw ParseError("atom normals must be nonzero");
            out.push_back({n.normalized(), detail::number(detail::require(a, "weight"))});
        }
        return DiscreteSurfaceMeasure(std::move(out));
    });
}

//---------------------------------------------------------------------------//
// Output

inline json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

inline json to_json(const Polytope3& p) {
    json vs = json::array();
    for (const auto& v : p.vertices())
        vs.push_back(to_json(v));
    json j{{"type", "polytope"}, {"vertices", vs}};
    if (p.full_dimensional()) {
        json fs = json::array();
        for (const auto& f : p.facets())
            fs.push_back({{"normal", to_json(f.normal)}, {"area", f.area}, {"offset", f.offset}});
        j["facets"] = fs;
        j["volume"] = p.volume();
    }
    return j;
}

inline json to_json(const DiscreteSurfaceMeasure& mu) {
    json atoms = json::array();
    for (const auto& a : mu.atoms())
        atoms.push_back({{"normal", to_json(a.normal)}, {"weight", a.weight}});
    return {{"atoms", atoms}};
}

inline json to_json(const CheckResult& c) {
    json j{{"id", c.id},   {"lhs", c.lhs}, {"rhs", c.rhs},
           {"slack", c.slack}, {"tol", c.tol}, {"status", c.status}};
    if (!c.flag.empty())
        j["flag"] = c.flag;
    return j;
}

inline json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    json env = json::object();
    for (const auto& [k, v] : r.environment)
        env[k] = v;
    return {{"suite", r.suite},
            {"passed", r.passed()},
            {"failures", r.failures()},
            {"checks", checks},
            {"environment", env}};
}

} // namespace bmh
