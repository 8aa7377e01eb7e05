// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/predicates.hpp
//! Filtered exact orientation predicate.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>

namespace bmh {

namespace detail {

inline int orient3d_exact(const Vec3& a, const Vec3& b, const Vec3& c,
                          const Vec3& d) {
    using boost::multiprecision::cpp_rational;
    auto q = [](double v) { return cpp_rational(v); };
    cpp_rational adx = q(a.x()) - q(d.x()), ady = q(a.y()) - q(d.y()),
                 adz = q(a.z()) - q(d.z());
    cpp_rational bdx = q(b.x()) - q(d.x()), bdy = q(b.y()) - q(d.y()),
                 bdz = q(b.z()) - q(d.z());
    cpp_rational cdx = q(c.x()) - q(d.x()), cdy = q(c.y()) - q(d.y()),
                 cdz = q(c.z()) - q(d.z());
    cpp_rational det = adx * (bdy * cdz - bdz * cdy)
                       + bdx * (cdy * adz - cdz * ady)
                       + cdx * (ady * bdz - adz * bdy);
    return -det.sign();
}

} // namespace detail

//! Sign of ((b - a) x (c - a)) . (d - a): +1 when \c d lies on the side the
//! counter-clockwise normal of triangle abc points to, 0 when coplanar.
//! Uses a static floating-point filter and falls back to rational arithmetic.
inline int orient3d(const Vec3& a, const Vec3& b, const Vec3& c,
                    const Vec3& d) {
    const double adx = a.x() - d.x(), ady = a.y() - d.y(), adz = a.z() - d.z();
    const double bdx = b.x() - d.x(), bdy = b.y() - d.y(), bdz = b.z() - d.z();
    const double cdx = c.x() - d.x(), cdy = c.y() - d.y(), cdz = c.z() - d.z();

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;

    const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy)
                       + cdz * (adxbdy - bdxady);
    const double permanent
        = (std::abs(bdxcdy) + std::abs(cdxbdy)) * std::abs(adz)
          + (std::abs(cdxady) + std::abs(adxcdy)) * std::abs(bdz)
          + (std::abs(adxbdy) + std::abs(bdxady)) * std::abs(cdz);
    constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
    constexpr double errbound = (7.0 + 56.0 * eps) * eps;
    if (det > errbound * permanent)
        return -1;
    if (-det > errbound * permanent)
        return 1;
    return detail::orient3d_exact(a, b, c, d);
}

} // namespace bmh
