// SPDX-License-Identifier: Apache-2.0
// Test-side reference computations, independent of the library routes they
// check.
#pragma once

#include <bmh/polytope.hpp>
#include <bmh/random.hpp>

#include <bmh/zonal.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <limits>
#include <vector>

namespace oracle {

using bmh::Vec3;

// Area of the projection of p onto u-perp by Monte Carlo: the line x + t u
// meets p iff the facet constraints leave a nonempty t-interval. Points are
// jittered on an n x n grid over the bounding rectangle of the shadow.
inline double shadow_area_mc(const bmh::Polytope3& p, const Vec3& u, bmh::Rng& rng,
                             int n = 400) {
    auto [e1, e2] = bmh::orthonormal_complement(u);
    double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
    for (const auto& v : p.vertices()) {
        lo1 = std::min(lo1, v.dot(e1));
        hi1 = std::max(hi1, v.dot(e1));
        lo2 = std::min(lo2, v.dot(e2));
        hi2 = std::max(hi2, v.dot(e2));
    }
    const double d1 = (hi1 - lo1) / n, d2 = (hi2 - lo2) / n;
    long hits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec3 x = (lo1 + (i + rng.uniform()) * d1) * e1 + (lo2 + (j + rng.uniform()) * d2) * e2;
            double lo = -std::numeric_limits<double>::infinity();
            double hi = std::numeric_limits<double>::infinity();
            bool empty = false;
            for (const auto& f : p.facets()) {
                double a = f.normal.dot(u), b = f.offset - f.normal.dot(x);
                if (std::abs(a) < 1e-14) {
                    if (b < 0)
                        empty = true;
                } else if (a > 0) {
                    hi = std::min(hi, b / a);
                } else {
                    lo = std::max(lo, b / a);
                }
            }
            hits += !empty && lo <= hi;
        }
    return d1 * d2 * static_cast<double>(hits);
}

// c_k = (1/2) int_{-1}^{1} g(t) P_k(t) dt by adaptive Gauss-Kronrod on the
// panels between the profile's kinks.
inline double legendre_coefficient(const bmh::ZonalProfile& g, int k) {
    std::vector<double> cuts{-1.0};
    for (double b : g.breakpoints())
        cuts.push_back(b);
    cuts.push_back(1.0);
    double s = 0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        s += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double t) { return g(t) * boost::math::legendre_p(k, t); }, cuts[i], cuts[i + 1], 15,
            1e-15);
    return 0.5 * s;
}

// W_1 = V(K, K, B) = S(K) / 3 from the facet areas of the hull.
inline double polytope_w1(const bmh::Polytope3& p) {
    double s = 0;
    for (const auto& f : p.facets())
        s += f.area;
    return s / 3.0;
}

} // namespace oracle
