// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/polytope.hpp
//! Convex polytopes in R^3 given by their vertices, with the facet data
//! (outer normal, area, support number) derived from the hull.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"
#include "hull.hpp"

#include <algorithm>
#include <array>
#include <concepts>
#include <numeric>
#include <span>
#include <vector>

namespace bmh {

//! Anything that can report h(K, u) for a unit direction u.
template<class T>
concept SupportFunction = requires(const T& body, const Vec3& u) {
    { body.support(u) } -> std::convertible_to<double>;
};

struct Facet {
    Vec3 normal;     //!< outer unit normal
    double area;     //!< two-dimensional area
    double offset;   //!< support number h(K, normal)
};

//! Boundary segment between two facets, as needed by edge sums.
struct Edge {
    int facet_a;
    int facet_b;
    double length;
};

class Polytope3 {
  public:
    //! Coplanar-triangle merging tolerance on the angle between normals.
    static constexpr double dihedral_tolerance = 1e-10;

    Polytope3() = default;

    //! Convex hull of a point set. Lower-dimensional hulls are allowed;
    //! they carry vertices only.
    //! Points closer than 1e-12 times the diameter are merged first, so
    //! rounding noise does not produce slivers at a vertex.
    static Polytope3 from_points(std::span<const Vec3> points) {
        double scale = 0;
        for (const auto& x : points)
            scale = std::max(scale, x.cwiseAbs().maxCoeff());
        const double merge = 1e-12 * scale;
        std::vector<Vec3> kept;
        kept.reserve(points.size());
        for (const auto& x : points) {
            bool seen = false;
            for (const auto& y : kept)
                if ((x - y).cwiseAbs().maxCoeff() <= merge) {
                    seen = true;
                    break;
                }
            if (!seen)
                kept.push_back(x);
        }
        Polytope3 p;
        p.build(convex_hull(kept));
        return p;
    }

    int dimension() const { return dimension_; }
    bool full_dimensional() const { return dimension_ == 3; }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Edge>& edges() const { return edges_; }
    //! Facet indices around each vertex, in cyclic order.
    const std::vector<std::vector<int>>& vertex_cones() const { return cones_; }

    double support(const Vec3& u) const {
        require_unit(u);
        return support_unchecked(u);
    }

    //! max_v u.v without the unit-length check (positively homogeneous).
    double support_unchecked(const Vec3& u) const {
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& v : vertices_)
            h = std::max(h, u.dot(v));
        return h;
    }

    double volume() const {
        double v = 0;
        for (const auto& f : facets_)
            v += f.area * f.offset;
        return v / 3.0;
    }

    double surface_area() const {
        double s = 0;
        for (const auto& f : facets_)
            s += f.area;
        return s;
    }

    //! Integral of mean curvature: (1/2) sum over edges of length times the
    //! angle between the adjacent facet normals.
    double mean_curvature_integral() const {
        double m = 0;
        for (const auto& e : edges_)
            m += e.length
                 * angle_between(facets_[e.facet_a].normal,
                                 facets_[e.facet_b].normal);
        return 0.5 * m;
    }

    Vec3 centroid_of_vertices() const {
        Vec3 c = Vec3::Zero();
        for (const auto& v : vertices_)
            c += v;
        return c / static_cast<double>(vertices_.size());
    }

    Polytope3 translated(const Vec3& x) const { return mapped([&](const Vec3& v) { return Vec3(v + x); }); }
    Polytope3 scaled(double s) const { return mapped([&](const Vec3& v) { return Vec3(s * v); }); }
    Polytope3 rotated(const Mat3& r) const { return mapped([&](const Vec3& v) { return Vec3(r * v); }); }
    Polytope3 reflected() const { return mapped([](const Vec3& v) { return Vec3(-v); }); }

    //! True if every facet inequality holds within \c tol.
    bool contains(const Vec3& x, double tol = 1e-12) const {
        for (const auto& f : facets_)
            if (f.normal.dot(x) > f.offset + tol)
                return false;
        return true;
    }

  private:
    template<class F>
    Polytope3 mapped(F&& f) const {
        std::vector<Vec3> pts;
        pts.reserve(vertices_.size());
        for (const auto& v : vertices_)
            pts.push_back(f(v));
        return from_points(pts);
    }

    void build(const HullMesh& mesh) {
        dimension_ = mesh.dimension;
        if (dimension_ < 3) {
            for (int i : mesh.vertices)
                vertices_.push_back(mesh.points[i]);
            return;
        }
        const auto& pts = mesh.points;
        const int nt = static_cast<int>(mesh.faces.size());

        // Vector areas of the triangles, then union of coplanar neighbours.
        std::vector<Vec3> tri_area(nt);
        for (int t = 0; t < nt; ++t) {
            const auto& f = mesh.faces[t];
            tri_area[t] = 0.5 * (pts[f[1]] - pts[f[0]]).cross(pts[f[2]] - pts[f[0]]);
        }
        std::vector<int> parent(nt);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int t = 0; t < nt; ++t) {
            for (int e = 0; e < 3; ++e) {
                int g = mesh.neighbor[t][e];
                if (g < t)
                    continue;
                const auto& tg = mesh.faces[g];
                int opposite = tg[0] + tg[1] + tg[2] - mesh.faces[t][e]
                               - mesh.faces[t][(e + 1) % 3];
                const auto& tf = mesh.faces[t];
                bool coplanar = orient3d(pts[tf[0]], pts[tf[1]], pts[tf[2]],
                                         pts[opposite]) == 0
                                || angle_between(tri_area[t].normalized(),
                                                 tri_area[g].normalized())
                                       <= dihedral_tolerance;
                if (coplanar)
                    parent[find(t)] = find(g);
            }
        }

        std::vector<int> group(nt, -1);
        std::vector<Vec3> group_area;
        for (int t = 0; t < nt; ++t) {
            int r = find(t);
            if (group[r] < 0) {
                group[r] = static_cast<int>(group_area.size());
                group_area.push_back(Vec3::Zero());
            }
            group[t] = group[r];
        }
        // group[] of roots was assigned first; propagate to members
        for (int t = 0; t < nt; ++t)
            group[t] = group[find(t)];
        for (int t = 0; t < nt; ++t)
            group_area[group[t]] += tri_area[t];

        // Extreme vertices: incident to at least three facets.
        auto fans = mesh.vertex_fans();
        std::vector<int> vertex_id(pts.size(), -1);
        for (int v : mesh.vertices) {
            std::vector<int> cone;
            for (int t : fans[v]) {
                int g = group[t];
                if (cone.empty() || cone.back() != g)
                    cone.push_back(g);
            }
            while (cone.size() > 1 && cone.front() == cone.back())
                cone.pop_back();
            if (cone.size() >= 3) {
                vertex_id[v] = static_cast<int>(vertices_.size());
                vertices_.push_back(pts[v]);
                cones_.push_back(std::move(cone));
            }
        }

        facets_.resize(group_area.size());
        for (size_t g = 0; g < group_area.size(); ++g) {
            double a = group_area[g].norm();
            facets_[g].area = a;
            facets_[g].normal = group_area[g] / a;
        }
        for (auto& f : facets_)
            f.offset = support_unchecked(f.normal);

        for (int t = 0; t < nt; ++t) {
            for (int e = 0; e < 3; ++e) {
                int g = mesh.neighbor[t][e];
                if (g < t || group[g] == group[t])
                    continue;
                const auto& tf = mesh.faces[t];
                double len = (pts[tf[(e + 1) % 3]] - pts[tf[e]]).norm();
                edges_.push_back({group[t], group[g], len});
            }
        }
    }

    int dimension_ = -1;
    std::vector<Vec3> vertices_;
    std::vector<Facet> facets_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> cones_;
};

//---------------------------------------------------------------------------//
// Exact polytope functionals
//---------------------------------------------------------------------------//

//! Quermassintegrals W_0..W_3 of a full-dimensional polytope:
//! volume, surface area / 3, mean-curvature integral / 3, and kappa_3.
inline std::array<double, 4> quermassintegrals(const Polytope3& body) {
    if (!body.full_dimensional())
        throw DimensionError("quermassintegrals need a full-dimensional body");
    return {body.volume(), body.surface_area() / 3.0,
            body.mean_curvature_integral() / 3.0, kappa(3)};
}

//! Solid angle of the spherical polygon with the given unit vertices
//! (cyclic order), via a triangle fan.
inline double spherical_polygon_area(std::span<const Vec3> corners) {
    double omega_sum = 0;
    const Vec3& a = corners[0];
    for (size_t j = 1; j + 1 < corners.size(); ++j) {
        const Vec3& b = corners[j];
        const Vec3& c = corners[j + 1];
        double num = a.dot(b.cross(c));
        double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
        omega_sum += 2.0 * std::atan2(num, den);
    }
    return std::abs(omega_sum);
}

//! Steiner point of a polytope: vertices weighted by the normalized solid
//! angles of their normal cones.
inline Vec3 steiner_point(const Polytope3& body) {
    if (body.dimension() < 3) {
        // Normal cones of lower-dimensional bodies are not stored; the
        // vertex average is exact for points and segments.
        if (body.dimension() <= 1)
            return body.centroid_of_vertices();
        throw DimensionError("exact Steiner point of a planar polygon "
                             "is not supported; use the quadrature route");
    }
    Vec3 s = Vec3::Zero();
    std::vector<Vec3> corners;
    for (size_t v = 0; v < body.vertices().size(); ++v) {
        corners.clear();
        for (int f : body.vertex_cones()[v])
            corners.push_back(body.facets()[f].normal);
        s += spherical_polygon_area(corners) / (4.0 * pi) * body.vertices()[v];
    }
    return s;
}

//! Minkowski sum: hull of pairwise vertex sums.
inline Polytope3 minkowski_sum(const Polytope3& a, const Polytope3& b) {
    std::vector<Vec3> pts;
    pts.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& x : a.vertices())
        for (const auto& y : b.vertices())
            pts.push_back(x + y);
    return Polytope3::from_points(pts);
}

//! Axis-aligned box [-a,a] x [-b,b] x [-c,c].
inline Polytope3 make_box(double a, double b, double c) {
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
        pts.emplace_back(i & 1 ? a : -a, i & 2 ? b : -b, i & 4 ? c : -c);
    return Polytope3::from_points(pts);
}

inline Polytope3 make_cube(double half_side = 1.0) {
    return make_box(half_side, half_side, half_side);
}

//! Regular tetrahedron with vertices (1,1,1),(1,-1,-1),(-1,1,-1),(-1,-1,1).
inline Polytope3 make_regular_tetrahedron() {
    std::vector<Vec3> pts{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    return Polytope3::from_points(pts);
}

inline Polytope3 make_cross_polytope(double r = 1.0) {
    std::vector<Vec3> pts{{r, 0, 0}, {-r, 0, 0}, {0, r, 0},
                          {0, -r, 0}, {0, 0, r}, {0, 0, -r}};
    return Polytope3::from_points(pts);
}

inline Polytope3 make_segment(const Vec3& a, const Vec3& b) {
    std::vector<Vec3> pts{a, b};
    return Polytope3::from_points(pts);
}

//! Zonotope sum_i [-g_i, g_i].
inline Polytope3 make_zonotope(std::span<const Vec3> generators) {
    std::vector<Vec3> pts{Vec3::Zero()};
    for (const auto& g : generators) {
        std::vector<Vec3> next;
        next.reserve(2 * pts.size());
        for (const auto& p : pts) {
            next.push_back(p + g);
            next.push_back(p - g);
        }
        auto hull = Polytope3::from_points(next);
        pts = hull.vertices();
    }
    return Polytope3::from_points(pts);
}

//! Volume of sum_i [-g_i, g_i] as 8 sum_{i<j<k} |det(g_i, g_j, g_k)|,
//! without building the zonotope.
inline double zonotope_volume(std::span<const Vec3> generators) {
    const size_t n = generators.size();
    double v = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Vec3 c = generators[i].cross(generators[j]);
            for (size_t k = j + 1; k < n; ++k)
                v += std::abs(c.dot(generators[k]));
        }
    return 8.0 * v;
}

} // namespace bmh
