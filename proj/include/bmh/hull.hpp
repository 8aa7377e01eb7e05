// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/hull.hpp
//! Incremental 3D convex hull with conflict lists and exact visibility.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"
#include "predicates.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <span>
#include <vector>

namespace bmh {

//! Triangulated hull surface. Faces are counter-clockwise seen from outside;
//! \c neighbor[f][i] is the face across edge (face[i], face[(i+1)%3]).
struct HullMesh {
    int dimension = -1;            //!< affine dimension of the input points
    std::vector<Vec3> points;      //!< input points (unchanged)
    std::vector<int> vertices;     //!< indices of extreme points
    std::vector<std::array<int, 3>> faces;
    std::vector<std::array<int, 3>> neighbor;

    //! Faces incident to each point, in cyclic order around it.
    std::vector<std::vector<int>> vertex_fans() const {
        std::vector<std::vector<int>> fans(points.size());
        std::vector<int> start(points.size(), -1);
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int v : faces[f])
                if (start[v] < 0)
                    start[v] = f;
        for (int v : vertices) {
            int f = start[v];
            if (f < 0)
                continue;
            do {
                fans[v].push_back(f);
                const auto& tri = faces[f];
                int i = static_cast<int>(std::find(tri.begin(), tri.end(), v)
                                         - tri.begin());
                f = neighbor[f][(i + 2) % 3];
            } while (f != start[v] && fans[v].size() <= faces.size());
        }
        return fans;
    }
};

namespace detail {

//! Extreme points of a set whose affine hull is at most a plane.
inline std::vector<int> lower_dim_extremes(std::span<const Vec3> pts,
                                           int dim, const Vec3& origin,
                                           const Vec3& dir1,
                                           const Vec3& normal) {
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (dim == 0)
        return {0};
    if (dim == 1) {
        auto key = [&](int i) { return (pts[i] - origin).dot(dir1); };
        auto [lo, hi] = std::minmax_element(
            idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });
        return {*lo, *hi};
    }
    // Planar: monotone chain in a 2D frame of the plane.
    Vec3 e1 = dir1.normalized();
    Vec3 e2 = normal.cross(e1).normalized();
    std::vector<std::pair<double, double>> q(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        Vec3 d = pts[i] - origin;
        q[i] = {d.dot(e1), d.dot(e2)};
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return q[a] < q[b]; });
    auto cross = [&](int o, int a, int b) {
        return (q[a].first - q[o].first) * (q[b].second - q[o].second)
               - (q[a].second - q[o].second) * (q[b].first - q[o].first);
    };
    std::vector<int> h(2 * idx.size());
    size_t k = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], idx[i]) <= 0)
            --k;
        h[k++] = idx[i];
    }
    for (size_t i = idx.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], idx[i - 1]) <= 0)
            --k;
        h[k++] = idx[i - 1];
    }
    h.resize(k > 1 ? k - 1 : k);
    return h;
}

} // namespace detail

//! Convex hull of a point cloud. Lower-dimensional inputs yield an empty
//! face list, the affine dimension and the extreme points.
inline HullMesh convex_hull(std::span<const Vec3> input) {
    HullMesh mesh;
    mesh.points.assign(input.begin(), input.end());
    const auto& pts = mesh.points;
    const int n = static_cast<int>(pts.size());
    if (n == 0)
        throw InputError("convex hull of an empty point set");

    // Initial simplex
    int i0 = 0;
    for (int i = 1; i < n; ++i)
        if (pts[i].x() < pts[i0].x()
            || (pts[i].x() == pts[i0].x() && pts[i].y() < pts[i0].y()))
            i0 = i;
    int i1 = i0;
    double best = 0;
    for (int i = 0; i < n; ++i) {
        double d = (pts[i] - pts[i0]).squaredNorm();
        if (d > best)
            best = d, i1 = i;
    }
    if (i1 == i0) {
        mesh.dimension = 0;
        mesh.vertices = {i0};
        return mesh;
    }
    const Vec3 dir = pts[i1] - pts[i0];
    int i2 = i0;
    best = 0;
    for (int i = 0; i < n; ++i) {
        double d = (pts[i] - pts[i0]).cross(dir).squaredNorm();
        if (d > best)
            best = d, i2 = i;
    }
    if (i2 == i0) {
        mesh.dimension = 1;
        mesh.vertices = detail::lower_dim_extremes(pts, 1, pts[i0], dir, Vec3());
        return mesh;
    }
    const Vec3 plane_normal = dir.cross(pts[i2] - pts[i0]);
    int i3 = -1;
    best = 0;
    for (int i = 0; i < n; ++i) {
        double d = std::abs((pts[i] - pts[i0]).dot(plane_normal));
        if (d > best && orient3d(pts[i0], pts[i1], pts[i2], pts[i]) != 0)
            best = d, i3 = i;
    }
    if (i3 < 0) {
        for (int i = 0; i < n && i3 < 0; ++i)
            if (orient3d(pts[i0], pts[i1], pts[i2], pts[i]) != 0)
                i3 = i;
    }
    if (i3 < 0) {
        mesh.dimension = 2;
        mesh.vertices = detail::lower_dim_extremes(pts, 2, pts[i0], dir,
                                                   plane_normal.normalized());
        return mesh;
    }
    mesh.dimension = 3;

    struct Face {
        std::array<int, 3> v;
        std::array<int, 3> nbr{-1, -1, -1};
        std::vector<int> conflict;
        bool alive = true;

        Face(int a, int b, int c) : v{a, b, c} {}
    };
    std::vector<Face> faces;
    faces.reserve(4 * static_cast<size_t>(n));

    auto above = [&](const Face& f, int p) {
        return orient3d(pts[f.v[0]], pts[f.v[1]], pts[f.v[2]], pts[p]) > 0;
    };
    auto distance = [&](const Face& f, int p) {
        Vec3 nrm = (pts[f.v[1]] - pts[f.v[0]]).cross(pts[f.v[2]] - pts[f.v[0]]);
        return nrm.dot(pts[p] - pts[f.v[0]]) / nrm.norm();
    };

    // Tetrahedron with outward orientation.
    {
        std::array<int, 4> t{i0, i1, i2, i3};
        if (orient3d(pts[i0], pts[i1], pts[i2], pts[i3]) > 0)
            std::swap(t[1], t[2]);
        // base (t0,t1,t2) now has t3 below it
        faces.emplace_back(t[0], t[1], t[2]);
        faces.emplace_back(t[0], t[3], t[1]);
        faces.emplace_back(t[1], t[3], t[2]);
        faces.emplace_back(t[2], t[3], t[0]);
        auto link = [&](int f) {
            for (int e = 0; e < 3; ++e) {
                int a = faces[f].v[e], b = faces[f].v[(e + 1) % 3];
                for (int g = 0; g < 4; ++g) {
                    if (g == f)
                        continue;
                    for (int k = 0; k < 3; ++k)
                        if (faces[g].v[k] == b && faces[g].v[(k + 1) % 3] == a)
                            faces[f].nbr[e] = g;
                }
            }
        };
        for (int f = 0; f < 4; ++f)
            link(f);
    }

    std::vector<char> used(n, 0);
    used[i0] = used[i1] = used[i2] = used[i3] = 1;
    for (int p = 0; p < n; ++p) {
        if (used[p])
            continue;
        for (auto& f : faces) {
            if (above(f, p)) {
                f.conflict.push_back(p);
                break;
            }
        }
    }

    std::vector<int> pending{0, 1, 2, 3};
    std::vector<int> visible, stack;
    std::vector<char> is_visible;
    std::map<int, std::pair<int, int>> horizon; // from -> (to, outside face)
    std::vector<int> orphans;

    while (!pending.empty()) {
        int fid = pending.back();
        pending.pop_back();
        if (!faces[fid].alive || faces[fid].conflict.empty())
            continue;

        // Farthest conflict point is a hull vertex of the current set.
        int eye = faces[fid].conflict.front();
        double far = distance(faces[fid], eye);
        for (int p : faces[fid].conflict) {
            double d = distance(faces[fid], p);
            if (d > far)
                far = d, eye = p;
        }

        visible.clear();
        if (is_visible.size() < faces.size())
            is_visible.resize(faces.size() + faces.size() / 2 + 16, 0);
        stack.assign(1, fid);
        is_visible[fid] = 1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            visible.push_back(f);
            for (int g : faces[f].nbr) {
                if (!is_visible[g] && above(faces[g], eye)) {
                    is_visible[g] = 1;
                    stack.push_back(g);
                }
            }
        }

        horizon.clear();
        for (int f : visible)
            for (int e = 0; e < 3; ++e) {
                int g = faces[f].nbr[e];
                if (!is_visible[g])
                    horizon[faces[f].v[e]] = {faces[f].v[(e + 1) % 3], g};
            }

        orphans.clear();
        for (int f : visible) {
            is_visible[f] = 0;
            faces[f].alive = false;
            for (int p : faces[f].conflict)
                if (p != eye)
                    orphans.push_back(p);
            faces[f].conflict.clear();
            faces[f].conflict.shrink_to_fit();
        }
        used[eye] = 1;

        // Fan of new faces around the eye, in horizon order.
        std::map<int, int> face_from, face_to; // horizon vertex -> new face
        const int first_new = static_cast<int>(faces.size());
        for (const auto& [a, link] : horizon) {
            auto [b, outside] = link;
            int nf = static_cast<int>(faces.size());
            faces.emplace_back(a, b, eye);
            faces[nf].nbr[0] = outside;
            for (int k = 0; k < 3; ++k)
                if (faces[outside].v[k] == b && faces[outside].v[(k + 1) % 3] == a)
                    faces[outside].nbr[k] = nf;
            face_from[a] = nf;
            face_to[b] = nf;
        }
        for (int nf = first_new; nf < static_cast<int>(faces.size()); ++nf) {
            int a = faces[nf].v[0], b = faces[nf].v[1];
            faces[nf].nbr[1] = face_from.at(b);
            faces[nf].nbr[2] = face_to.at(a);
        }

        for (int p : orphans) {
            for (int nf = first_new; nf < static_cast<int>(faces.size()); ++nf) {
                if (above(faces[nf], p)) {
                    faces[nf].conflict.push_back(p);
                    break;
                }
            }
        }
        for (int nf = first_new; nf < static_cast<int>(faces.size()); ++nf)
            if (!faces[nf].conflict.empty())
                pending.push_back(nf);
    }

    std::vector<int> remap(faces.size(), -1);
    int count = 0;
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].alive)
            remap[f] = count++;
    mesh.faces.reserve(count);
    mesh.neighbor.reserve(count);
    std::vector<char> on_hull(n, 0);
    for (size_t f = 0; f < faces.size(); ++f) {
        if (!faces[f].alive)
            continue;
        mesh.faces.push_back(faces[f].v);
        mesh.neighbor.push_back({remap[faces[f].nbr[0]], remap[faces[f].nbr[1]],
                                 remap[faces[f].nbr[2]]});
        for (int v : faces[f].v)
            on_hull[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (on_hull[i])
            mesh.vertices.push_back(i);
    return mesh;
}

} // namespace bmh
