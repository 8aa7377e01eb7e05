// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/halfspace.hpp
//! Intersection of halfspaces {x : u_j . x <= h_j} through the dual hull.
//---------------------------------------------------------------------------//
#pragma once

#include "bodies.hpp"
#include "hull.hpp"
#include "polytope.hpp"

#include <map>
#include <span>
#include <vector>

namespace bmh {

//! Bounded intersection of halfspaces together with the per-halfspace data
//! needed for the first and second variation of the volume.
struct HalfspaceCell {
    std::vector<Vec3> vertices;   //!< one per dual triangle (may repeat)
    std::vector<double> areas;    //!< facet area of each halfspace (0 if inactive)
    std::vector<double> support;  //!< h(P, u_j) for every input direction
    //! Shared-edge lengths, keyed by (i, j) with i < j.
    std::map<std::pair<int, int>, double> edge_lengths;
    double volume = 0;
};

//! Intersect halfspaces u_j . x <= h_j. \c interior must satisfy all of them
//! strictly. Throws NumericError if the intersection is unbounded or the
//! point is not interior.
inline HalfspaceCell intersect_halfspaces(std::span<const Vec3> normals,
                                          std::span<const double> offsets,
                                          const Vec3& interior = Vec3::Zero()) {
    const size_t m = normals.size();
    if (m != offsets.size())
        throw InputError("halfspace normals and offsets differ in length");
    if (m < 4)
        throw NumericError("fewer than four halfspaces cannot bound a body");

    std::vector<Vec3> dual(m);
    for (size_t j = 0; j < m; ++j) {
        double slack = offsets[j] - normals[j].dot(interior);
        if (!(slack > 0))
            throw NumericError("reference point is not interior to the halfspaces");
        dual[j] = normals[j] / slack;
    }
    const HullMesh mesh = convex_hull(dual);
    if (mesh.dimension < 3)
        throw NumericError("halfspace intersection is unbounded");

    HalfspaceCell cell;
    const size_t nt = mesh.faces.size();
    cell.vertices.resize(nt);
    for (size_t t = 0; t < nt; ++t) {
        const auto& f = mesh.faces[t];
        Vec3 n = (dual[f[1]] - dual[f[0]]).cross(dual[f[2]] - dual[f[0]]);
        double d = n.dot(dual[f[0]]);
        // d <= 0: the origin of the dual is not inside the dual hull, i.e. some
        // direction is not bounded by any halfspace.
        if (!(d > 1e-14 * n.norm() * dual[f[0]].norm()))
            throw NumericError("halfspace intersection is unbounded");
        cell.vertices[t] = interior + n / d;
    }

    cell.areas.assign(m, 0.0);
    const auto fans = mesh.vertex_fans();
    for (int j : mesh.vertices) {
        const auto& fan = fans[j];
        Vec3 acc = Vec3::Zero();
        for (size_t k = 0; k < fan.size(); ++k) {
            const Vec3 a = cell.vertices[fan[k]] - interior;
            const Vec3 b = cell.vertices[fan[(k + 1) % fan.size()]] - interior;
            acc += a.cross(b);
        }
        cell.areas[j] = 0.5 * std::abs(acc.dot(normals[j]));
    }

    for (size_t t = 0; t < nt; ++t) {
        for (int e = 0; e < 3; ++e) {
            size_t g = static_cast<size_t>(mesh.neighbor[t][e]);
            if (g < t)
                continue;
            int a = mesh.faces[t][e], b = mesh.faces[t][(e + 1) % 3];
            double len = (cell.vertices[t] - cell.vertices[g]).norm();
            cell.edge_lengths[{std::min(a, b), std::max(a, b)}] += len;
        }
    }

    cell.support.resize(m);
    for (size_t j = 0; j < m; ++j) {
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& v : cell.vertices)
            h = std::max(h, normals[j].dot(v));
        cell.support[j] = h;
    }
    for (size_t j = 0; j < m; ++j)
        cell.volume += cell.areas[j] * (cell.support[j] - normals[j].dot(interior));
    cell.volume /= 3.0;
    return cell;
}

struct SampleRealization {
    Polytope3 body;
    //! max_j (h_j - h(P, u_j)); near zero when the samples come from a
    //! support function and every direction is active.
    double mismatch = 0;
};

//! Polytope {x : x . u_j <= h_j} from sampled support values.
inline SampleRealization body_from_support_samples(const SupportSampleBody& s) {
    if (s.directions.size() != s.values.size())
        throw InputError("support samples and directions differ in length");
    Vec3 c = s.weights.size() == s.values.size() ? s.steiner_point()
                                                 : Vec3::Zero();
    HalfspaceCell cell = intersect_halfspaces(s.directions, s.values, c);
    SampleRealization out;
    out.body = Polytope3::from_points(cell.vertices);
    for (size_t j = 0; j < s.values.size(); ++j)
        out.mismatch = std::max(out.mismatch, s.values[j] - cell.support[j]);
    return out;
}

} // namespace bmh
