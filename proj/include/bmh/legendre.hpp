// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/legendre.hpp
//! Legendre polynomials P_k^n of dimension n, normalized by P_k^n(1) = 1.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"

#include <vector>

namespace bmh {

namespace detail {

inline void check_legendre_args(int n, int k, double t) {
    if (n < 3)
        throw DimensionError("Legendre polynomials need n >= 3");
    if (k < 0)
        throw InputError("Legendre degree must be nonnegative");
    if (!(t >= -1.0 - 1e-14 && t <= 1.0 + 1e-14))
        throw InputError("Legendre argument outside [-1, 1]");
}

} // namespace detail

//! Dimension of the space of spherical harmonics of degree k on S^{n-1}.
inline double harmonic_dimension(int n, int k) {
    if (k == 0)
        return 1.0;
    // (2k+n-2)(k+n-3)! / (k! (n-2)!)
    return (2.0 * k + n - 2) / (k + n - 2) * binomial(k + n - 2, k);
}

//! Values P_0^n(t) .. P_K^n(t) by the three-term recurrence
//! (k+n-3) P_k = (2k+n-4) t P_{k-1} - (k-1) P_{k-2}.
inline std::vector<double> legendre_all(int n, int max_degree, double t) {
    detail::check_legendre_args(n, max_degree, t);
    t = clamp_unit(t);
    std::vector<double> p(max_degree + 1);
    p[0] = 1.0;
    if (max_degree >= 1)
        p[1] = t;
    for (int k = 2; k <= max_degree; ++k)
        p[k] = ((2.0 * k + n - 4) * t * p[k - 1] - (k - 1.0) * p[k - 2])
               / (k + n - 3.0);
    return p;
}

inline double legendre(int n, int k, double t) {
    return legendre_all(n, k, t)[k];
}

//! Recurrence coefficients cached for a fixed dimension and maximal degree.
class LegendreEvaluator {
  public:
    LegendreEvaluator(int n, int max_degree) : n_(n), max_degree_(max_degree) {
        detail::check_legendre_args(n, max_degree, 0.0);
        a_.resize(max_degree + 1);
        b_.resize(max_degree + 1);
        for (int k = 2; k <= max_degree; ++k) {
            a_[k] = (2.0 * k + n - 4) / (k + n - 3.0);
            b_[k] = (k - 1.0) / (k + n - 3.0);
        }
    }

    int dimension() const { return n_; }
    int max_degree() const { return max_degree_; }

    //! Fill out[0..K] with P_k^n(t).
    void evaluate(double t, double* out) const {
        out[0] = 1.0;
        if (max_degree_ >= 1)
            out[1] = t;
        for (int k = 2; k <= max_degree_; ++k)
            out[k] = a_[k] * t * out[k - 1] - b_[k] * out[k - 2];
    }

  private:
    int n_;
    int max_degree_;
    std::vector<double> a_, b_;
};

} // namespace bmh
