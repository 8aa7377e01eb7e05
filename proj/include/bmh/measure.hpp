// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/measure.hpp
//! Discrete surface area measures on S^2 and the functionals built on them.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"
#include "polytope.hpp"

#include <span>
#include <vector>

namespace bmh {

struct Atom {
    Vec3 normal;
    double weight;
};

//! Finite positive measure on the sphere, stored as atoms (u_i, a_i).
//! Weights carry raw area (Hausdorff) units.
class DiscreteSurfaceMeasure {
  public:
    //! Angular distance below which two atoms are the same point.
    static constexpr double coincidence_angle = 1e-9;

    DiscreteSurfaceMeasure() = default;

    explicit DiscreteSurfaceMeasure(std::vector<Atom> atoms) {
        for (auto& a : atoms) {
            if (!(a.weight > 0) || !std::isfinite(a.weight))
                throw InputError("surface measure weights must be positive");
            double len = a.normal.norm();
            if (!(std::abs(len - 1.0) <= 1e-9))
                throw InputError("surface measure atoms need unit normals");
            a.normal /= len;
            add(a);
        }
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    double total_mass() const {
        double m = 0;
        for (const auto& a : atoms_)
            m += a.weight;
        return m;
    }

    //! sum_i a_i u_i; vanishes for surface area measures.
    Vec3 moment() const {
        Vec3 m = Vec3::Zero();
        for (const auto& a : atoms_)
            m += a.weight * a.normal;
        return m;
    }

    //! |moment| / total mass.
    double moment_defect() const { return moment().norm() / total_mass(); }

    //! Smallest singular value of sum_i a_i u_i u_i^T relative to the mass;
    //! zero iff the atoms lie on a great circle.
    double spread() const {
        Mat3 m = Mat3::Zero();
        for (const auto& a : atoms_)
            m += a.weight * a.normal * a.normal.transpose();
        Eigen::SelfAdjointEigenSolver<Mat3> es(m);
        return es.eigenvalues()(0) / total_mass();
    }

    DiscreteSurfaceMeasure rotated(const Mat3& r) const {
        DiscreteSurfaceMeasure out;
        out.atoms_.reserve(atoms_.size());
        for (const auto& a : atoms_)
            out.atoms_.push_back({r * a.normal, a.weight});
        return out;
    }

    DiscreteSurfaceMeasure scaled(double s) const {
        if (!(s > 0))
            throw InputError("measure scale factor must be positive");
        DiscreteSurfaceMeasure out = *this;
        for (auto& a : out.atoms_)
            a.weight *= s;
        return out;
    }

    //! Image under u -> -u (surface measure of -K).
    DiscreteSurfaceMeasure reflected() const {
        DiscreteSurfaceMeasure out = *this;
        for (auto& a : out.atoms_)
            a.normal = -a.normal;
        return out;
    }

    //! Insert an atom, coalescing with an existing one at the same normal.
    void add(const Atom& atom) {
        for (auto& a : atoms_) {
            // cheap rejection before the accurate angle
            if (a.normal.dot(atom.normal) < 0.5)
                continue;
            if (angle_between(a.normal, atom.normal) <= coincidence_angle) {
                a.weight += atom.weight;
                return;
            }
        }
        atoms_.push_back(atom);
    }

  private:
    std::vector<Atom> atoms_;
};

//! Surface area measure of a full-dimensional polytope: one atom per facet.
inline DiscreteSurfaceMeasure surface_measure(const Polytope3& body) {
    if (!body.full_dimensional())
        throw DimensionError("surface measure needs a full-dimensional body");
    std::vector<Atom> atoms;
    atoms.reserve(body.facets().size());
    for (const auto& f : body.facets())
        atoms.push_back({f.normal, f.area});
    return DiscreteSurfaceMeasure(std::move(atoms));
}

//! Weighted Blaschke sum l1 * mu + l2 * nu.
inline DiscreteSurfaceMeasure blaschke_sum(const DiscreteSurfaceMeasure& mu,
                                           const DiscreteSurfaceMeasure& nu,
                                           double l1 = 1.0, double l2 = 1.0) {
    if (l1 < 0 || l2 < 0)
        throw InputError("Blaschke coefficients must be nonnegative");
    if (l1 == 0 && l2 == 0)
        throw InputError("Blaschke coefficients must not both vanish");
    DiscreteSurfaceMeasure out;
    if (l1 > 0)
        for (const auto& a : mu.atoms())
            out.add({a.normal, l1 * a.weight});
    if (l2 > 0)
        for (const auto& a : nu.atoms())
            out.add({a.normal, l2 * a.weight});
    return out;
}

//! V_1(K, L) = (1/3) sum_i a_i h(L, u_i) for K given by its measure.
template<SupportFunction Body>
double mixed_volume_v1(const DiscreteSurfaceMeasure& k, const Body& l) {
    double v = 0;
    for (const auto& a : k.atoms())
        v += a.weight * l.support(a.normal);
    return v / 3.0;
}

//! Surface area measure of the zonotope sum_i [-g_i, g_i]: every pair of
//! non-parallel generators contributes 4 |g_i x g_j| at both normals
//! +-(g_i x g_j); coplanar pairs land on the same atom.
inline DiscreteSurfaceMeasure zonotope_surface_measure(std::span<const Vec3> generators) {
    DiscreteSurfaceMeasure out;
    double scale = 0;
    for (const auto& g : generators)
        scale = std::max(scale, g.norm());
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j) {
            Vec3 c = generators[i].cross(generators[j]);
            double a = c.norm();
            if (a <= 1e-14 * scale * scale)
                continue;
            out.add({c / a, 4 * a});
            out.add({-c / a, 4 * a});
        }
    if (out.empty())
        throw DimensionError("zonotope generators span less than a plane");
    return out;
}

} // namespace bmh
