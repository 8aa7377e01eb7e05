// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/random.hpp
//! Seeded generators for test bodies. Distributions are implemented here on
//! top of mt19937_64 so that sequences do not depend on the standard
//! library's distribution implementations.
//---------------------------------------------------------------------------//
#pragma once

#include "bodies.hpp"
#include "polytope.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bmh {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    //! Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    //! Uniform integer in [lo, hi].
    int integer(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * pi * u2);
        has_spare_ = true;
        return r * std::cos(2.0 * pi * u2);
    }

    Vec3 direction() {
        for (;;) {
            Vec3 v(normal(), normal(), normal());
            double n = v.norm();
            if (n > 1e-8)
                return v / n;
        }
    }

    //! Haar-random rotation from a uniform unit quaternion.
    Mat3 rotation() {
        Eigen::Quaterniond q(normal(), normal(), normal(), normal());
        q.normalize();
        return q.toRotationMatrix();
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0;
    bool has_spare_ = false;
};

//! Hull of m uniform sphere points, scaled by \c radius and shifted.
inline Polytope3 random_polytope(Rng& rng, int m, double radius = 1.0,
                                 const Vec3& shift = Vec3::Zero()) {
    for (;;) {
        std::vector<Vec3> pts;
        pts.reserve(m);
        for (int i = 0; i < m; ++i)
            pts.push_back(shift + radius * rng.direction());
        Polytope3 p = Polytope3::from_points(pts);
        if (p.full_dimensional() && p.volume() > 1e-3 * radius * radius * radius)
            return p;
    }
}

//! Random polytope with m in [8, 40] vertices and a random offset.
inline Polytope3 random_polytope(Rng& rng) {
    int m = rng.integer(8, 40);
    double radius = rng.uniform(0.5, 2.0);
    Vec3 shift(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    return random_polytope(rng, m, radius, shift);
}

//! Random polytope with between min_facets and max_facets facets.
inline Polytope3 random_polytope_with_facets(Rng& rng, int min_facets,
                                             int max_facets) {
    for (;;) {
        int m = rng.integer(4, 12);
        Polytope3 p = random_polytope(rng, m, rng.uniform(0.5, 2.0));
        int f = static_cast<int>(p.facets().size());
        if (f >= min_facets && f <= max_facets)
            return p;
    }
}

//! Ellipsoid with semiaxes in [0.5, 2] and a random orientation.
inline Ellipsoid random_ellipsoid(Rng& rng) {
    Vec3 axes(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0));
    return Ellipsoid(axes, rng.rotation());
}

} // namespace bmh
