// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/bodies.hpp
//! Smooth bodies given in closed form, and sampled support functions.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"
#include "quadrature.hpp"

#include <array>
#include <vector>

namespace bmh {

class BallBody {
  public:
    BallBody(const Vec3& center = Vec3::Zero(), double radius = 1.0)
        : center_(center), radius_(radius) {
        if (!(radius >= 0) || !std::isfinite(radius))
            throw InputError("ball radius must be nonnegative");
    }

    const Vec3& center() const { return center_; }
    double radius() const { return radius_; }

    double support(const Vec3& u) const {
        require_unit(u);
        return center_.dot(u) + radius_;
    }

    double volume() const { return kappa(3) * radius_ * radius_ * radius_; }

    //! W_i = kappa_3 r^{3-i}.
    std::array<double, 4> quermassintegrals() const {
        const double k = kappa(3), r = radius_;
        return {k * r * r * r, k * r * r, k * r, k};
    }

  private:
    Vec3 center_;
    double radius_;
};

//! Ellipsoid center + R diag(a,b,c) B^3. Its support function is
//! sqrt(u^T A u) with A = R diag(a^2,b^2,c^2) R^T, smooth on the sphere.
class Ellipsoid {
  public:
    Ellipsoid(const Vec3& semiaxes, const Mat3& rotation = Mat3::Identity(),
              const Vec3& center = Vec3::Zero())
        : axes_(semiaxes), rotation_(rotation), center_(center) {
        if (!(semiaxes.minCoeff() > 0))
            throw InputError("ellipsoid semiaxes must be positive");
        form_ = rotation * semiaxes.cwiseAbs2().asDiagonal() * rotation.transpose();
        det_ = std::pow(semiaxes.prod(), 2);
    }

    const Vec3& semiaxes() const { return axes_; }
    const Mat3& rotation() const { return rotation_; }
    const Vec3& center() const { return center_; }

    double support(const Vec3& u) const {
        require_unit(u);
        return center_.dot(u) + std::sqrt(u.dot(form_ * u));
    }

    //! Sum of the principal radii of curvature at the point with normal u.
    double radii_sum(const Vec3& u) const {
        double h2 = u.dot(form_ * u);
        double h = std::sqrt(h2);
        return form_.trace() / h - (form_ * u).squaredNorm() / (h2 * h);
    }

    //! Product of the principal radii (density of S_2 w.r.t. area on S^2).
    double radii_product(const Vec3& u) const {
        double h2 = u.dot(form_ * u);
        return det_ / (h2 * h2);
    }

    //! Euclidean Hessian of the 1-homogeneous support function at u. Its
    //! restriction to the tangent plane has the principal radii as
    //! eigenvalues.
    Mat3 support_hessian(const Vec3& u) const {
        double h = std::sqrt(u.dot(form_ * u));
        Vec3 au = form_ * u;
        return form_ / h - au * au.transpose() / (h * h * h);
    }

    double volume() const { return kappa(3) * axes_.prod(); }

    Ellipsoid translated(const Vec3& x) const {
        return Ellipsoid(axes_, rotation_, center_ + x);
    }

  private:
    Vec3 axes_;
    Mat3 rotation_;
    Vec3 center_;
    Mat3 form_;
    double det_;
};

//! Support function known only on a set of directions, with the
//! quadrature weights of that set (probability-normalized).
struct SupportSampleBody {
    std::vector<Vec3> directions;
    std::vector<double> weights;
    std::vector<double> values;

    template<SupportFunction Body>
    static SupportSampleBody sample(const Body& body, const SphereGrid& grid) {
        SupportSampleBody s;
        s.directions = grid.directions();
        s.weights = grid.weights();
        s.values.reserve(grid.size());
        for (const auto& u : grid.directions())
            s.values.push_back(body.support(u));
        return s;
    }

    double mean() const {
        double m = 0;
        for (size_t i = 0; i < values.size(); ++i)
            m += weights[i] * values[i];
        return m;
    }

    //! 3 * mean(h u): exact for the degree-one part on an exact rule.
    Vec3 steiner_point() const {
        Vec3 s = Vec3::Zero();
        for (size_t i = 0; i < values.size(); ++i)
            s += weights[i] * values[i] * directions[i];
        return 3.0 * s;
    }
};

} // namespace bmh
