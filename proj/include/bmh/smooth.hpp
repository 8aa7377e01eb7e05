// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/smooth.hpp
//! Bodies given by support functions rather than vertices, and their
//! spectral form (support function plus curvature density).
//---------------------------------------------------------------------------//
#pragma once

#include "bodies.hpp"
#include "harmonics.hpp"
#include "polytope.hpp"
#include "zonal.hpp"

#include <variant>

namespace bmh {

//! Body of revolution with h(u) = f(u . axis). A body only when f passes
//! is_support_profile.
class ZonalSupportBody {
  public:
    explicit ZonalSupportBody(ZonalProfile f, const Vec3& axis = Vec3::UnitZ())
        : f_(std::move(f)), axis_(axis.normalized()) {}

    const ZonalProfile& profile() const { return f_; }
    const Vec3& axis() const { return axis_; }

    double support(const Vec3& u) const {
        require_unit(u);
        return f_(clamp_unit(u.dot(axis_)));
    }

    //! Product of the principal radii at normal u. With t = u . axis the
    //! meridian radius is f - t f' + (1 - t^2) f'' and the parallel radius is
    //! f - t f'. Derivatives by central differences of step \c dt, one-sided
    //! near t = +-1.
    double radii_product(const Vec3& u, double dt = 1e-4) const {
        const double t = clamp_unit(u.dot(axis_));
        const double a = std::max(-1.0, t - dt), b = std::min(1.0, t + dt);
        const double m = 0.5 * (a + b), hw = 0.5 * (b - a);
        const double fa = f_(a), fm = f_(m), fb = f_(b);
        const double d1 = (fb - fa) / (b - a);
        const double d2 = (fb - 2 * fm + fa) / (hw * hw);
        const double f = f_(t);
        const double parallel = f - t * d1;
        const double meridian = parallel + (1 - t * t) * d2;
        return std::max(0.0, meridian) * std::max(0.0, parallel);
    }

  private:
    ZonalProfile f_;
    Vec3 axis_;
};

using Body = std::variant<Polytope3, BallBody, Ellipsoid, ZonalSupportBody>;

inline double support(const Body& k, const Vec3& u) {
    return std::visit([&](const auto& b) { return b.support(u); }, k);
}

//! Spectral form with the curvature density of S_2 (probability-measure
//! normalization, so the unit ball has density 4 pi).
//! \throws DimensionError when the body has no surface area
inline SpectralBody spectral_body(const Body& k, int max_degree = 12,
                                  const SphereGrid& grid = SphereGrid()) {
    SpectralBody out = std::visit(
        [&](const auto& b) -> SpectralBody {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, Polytope3>) {
                return SpectralBody::from_polytope(b, max_degree, grid);
            } else if constexpr (std::is_same_v<T, BallBody>) {
                Vec3 r = Vec3::Constant(b.radius());
                if (b.radius() <= 0)
                    throw DimensionError("ball of radius 0 has no surface area");
                return SpectralBody::from_ellipsoid(Ellipsoid(r, Mat3::Identity(), b.center()),
                                                    max_degree, grid);
            } else if constexpr (std::is_same_v<T, Ellipsoid>) {
                return SpectralBody::from_ellipsoid(b, max_degree, grid);
            } else {
                auto h = expand([&](const Vec3& u) { return b.support(u); }, max_degree, grid);
                auto area = expand([&](const Vec3& u) { return 4 * pi * b.radii_product(u); },
                                   max_degree, grid);
                return SpectralBody(std::move(h), std::move(area));
            }
        },
        k);
    if (!(out.area_density()(0, 0) > 1e-12))
        throw DimensionError("body has no surface area");
    return out;
}

} // namespace bmh
