// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/common.hpp
//! Shared vector types, dimension constants and the error hierarchy.
//---------------------------------------------------------------------------//
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bmh {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double pi = std::numbers::pi;

//! Ambient dimension of every concrete body in the library.
inline constexpr int ambient_dim = 3;

//---------------------------------------------------------------------------//
// Errors
//---------------------------------------------------------------------------//

//! Invalid argument (non-unit direction, negative weights, bad spec, ...)
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

//! Body is lower dimensional where a full-dimensional body is required.
class DimensionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//! A numerical procedure could not produce a meaningful answer.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
// Ball constants, n-general.
//---------------------------------------------------------------------------//

//! Volume of the unit ball in R^n.
inline double kappa(int n) {
    return std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

//! Surface area of the unit sphere S^{n-1} (= n * kappa(n)).
inline double omega(int n) {
    return n * kappa(n);
}

inline constexpr double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

//---------------------------------------------------------------------------//
// Small vector helpers
//---------------------------------------------------------------------------//

inline constexpr double unit_tolerance = 1e-12;

inline void require_unit(const Vec3& u, const char* what = "direction") {
    if (!(std::abs(u.norm() - 1.0) <= unit_tolerance))
        throw InputError(std::string(what) + " is not a unit vector");
}

//! Orthonormal pair spanning the plane orthogonal to the unit vector \c a.
inline std::pair<Vec3, Vec3> orthonormal_complement(const Vec3& a) {
    Vec3 helper = std::abs(a.x()) < 0.6 ? Vec3::UnitX()
                  : std::abs(a.y()) < 0.6 ? Vec3::UnitY()
                                          : Vec3::UnitZ();
    Vec3 e1 = (helper - helper.dot(a) * a).normalized();
    Vec3 e2 = a.cross(e1);
    return {e1, e2};
}

//! Clamp an inner product of unit vectors into [-1, 1].
inline double clamp_unit(double t) {
    return t > 1.0 ? 1.0 : (t < -1.0 ? -1.0 : t);
}

//! Angle between two unit vectors, accurate also for nearly parallel ones.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

} // namespace bmh
