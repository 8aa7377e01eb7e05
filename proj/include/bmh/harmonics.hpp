// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/harmonics.hpp
//! Real spherical harmonics on S^2, band projections, multiplier transforms
//! and spectral representations of support functions.
//!
//! Harmonics are orthonormal for the probability measure on the sphere, so
//! Y_00 = 1 and sum_m Y_km(u) Y_km(v) = (2k+1) P_k(u.v). Coefficients are
//! stored flat at index k^2 + k + m; m < 0 selects sin(|m| phi), m > 0
//! selects cos(m phi). No Condon-Shortley phase.
//---------------------------------------------------------------------------//
#pragma once

#include "bodies.hpp"
#include "common.hpp"
#include "measure.hpp"
#include "polytope.hpp"
#include "quadrature.hpp"
#include "zonal.hpp"

#include <string>
#include <vector>

namespace bmh {

inline int harmonic_index(int k, int m) { return k * k + k + m; }
inline int harmonic_count(int max_degree) { return (max_degree + 1) * (max_degree + 1); }

//---------------------------------------------------------------------------//
//! Evaluates all Y_km, k <= K, at a direction.
class RealHarmonics {
  public:
    explicit RealHarmonics(int max_degree) : K_(max_degree) {
        if (max_degree < 0)
            throw InputError("maximal degree must be nonnegative");
        const int n = K_ + 1;
        a_.assign(n * n, 0.0);
        b_.assign(n * n, 0.0);
        for (int m = 0; m <= K_; ++m)
            for (int k = m + 2; k <= K_; ++k) {
                double kk = k, mm = m;
                a_[k * n + m] = std::sqrt((2 * kk + 1) * (2 * kk - 1) / ((kk + mm) * (kk - mm)));
                b_[k * n + m] = std::sqrt((2 * kk + 1) * (kk + mm - 1) * (kk - mm - 1)
                                          / ((2 * kk - 3) * (kk + mm) * (kk - mm)));
            }
    }

    int max_degree() const { return K_; }
    int size() const { return harmonic_count(K_); }

    //! Fill out[0 .. (K+1)^2) with Y_km(u).
    void evaluate(const Vec3& u, double* out) const {
        const int n = K_ + 1;
        const double t = clamp_unit(u.z());
        const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
        // azimuth through the planar components avoids atan2 at the poles
        double cphi = 1.0, sphi = 0.0;
        double rho = std::hypot(u.x(), u.y());
        if (rho > 0) {
            cphi = u.x() / rho;
            sphi = u.y() / rho;
        }
        double pmm = 1.0;     // fully normalized P_mm
        double cm = 1.0, sm = 0.0;   // cos(m phi), sin(m phi)
        for (int m = 0; m <= K_; ++m) {
            if (m > 0) {
                pmm *= s * std::sqrt((2.0 * m + 1) / (2.0 * m)) * (m == 1 ? std::sqrt(2.0) : 1.0);
                double c2 = cm * cphi - sm * sphi;
                sm = sm * cphi + cm * sphi;
                cm = c2;
            }
            // order m column: P_mm, P_{m+1,m}, ...
            double p2 = 0.0, p1 = pmm;
            for (int k = m; k <= K_; ++k) {
                double p;
                if (k == m)
                    p = pmm;
                else if (k == m + 1)
                    p = std::sqrt(2.0 * m + 3) * t * pmm;
                else
                    p = a_[k * n + m] * t * p1 - b_[k * n + m] * p2;
                if (k > m) {
                    p2 = p1;
                    p1 = p;
                }
                if (m == 0) {
                    out[harmonic_index(k, 0)] = p;
                } else {
                    out[harmonic_index(k, m)] = p * cm;
                    out[harmonic_index(k, -m)] = p * sm;
                }
            }
        }
    }

    std::vector<double> operator()(const Vec3& u) const {
        std::vector<double> out(size());
        evaluate(u, out.data());
        return out;
    }

  private:
    int K_;
    std::vector<double> a_, b_;
};

//---------------------------------------------------------------------------//
//! Coefficient table of a function (or a measure density with respect to
//! the probability measure) up to degree K.
class HarmonicExpansion {
  public:
    HarmonicExpansion() = default;
    explicit HarmonicExpansion(int max_degree, std::string grid = {})
        : K_(max_degree), coeffs_(harmonic_count(max_degree), 0.0), grid_(std::move(grid)) {
        if (max_degree < 0)
            throw InputError("maximal degree must be nonnegative");
    }

    int max_degree() const { return K_; }
    //! Quadrature grid that produced the table ("exact" for atom sums).
    const std::string& grid() const { return grid_; }

    double& operator()(int k, int m) { return coeffs_.at(harmonic_index(k, m)); }
    double operator()(int k, int m) const { return coeffs_.at(harmonic_index(k, m)); }
    std::vector<double>& coefficients() { return coeffs_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    //! L2 norm of band k (probability measure), basis independent.
    double band_norm(int k) const {
        check_degree(k);
        double s = 0;
        for (int m = -k; m <= k; ++m)
            s += coeffs_[harmonic_index(k, m)] * coeffs_[harmonic_index(k, m)];
        return std::sqrt(s);
    }

    double evaluate(const Vec3& u) const {
        require_unit(u);
        std::vector<double> y = RealHarmonics(K_)(u);
        double v = 0;
        for (size_t i = 0; i < y.size(); ++i)
            v += coeffs_[i] * y[i];
        return v;
    }

    //! Value of the band-k component pi_k f at u.
    double evaluate_band(int k, const Vec3& u) const {
        check_degree(k);
        std::vector<double> y = RealHarmonics(K_)(u);
        double v = 0;
        for (int m = -k; m <= k; ++m)
            v += coeffs_[harmonic_index(k, m)] * y[harmonic_index(k, m)];
        return v;
    }

    HarmonicExpansion& operator+=(const HarmonicExpansion& o) {
        check_same(o);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    HarmonicExpansion& operator-=(const HarmonicExpansion& o) {
        check_same(o);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    HarmonicExpansion& operator*=(double s) {
        for (double& c : coeffs_)
            c *= s;
        return *this;
    }
    friend HarmonicExpansion operator+(HarmonicExpansion a, const HarmonicExpansion& b) { return a += b; }
    friend HarmonicExpansion operator-(HarmonicExpansion a, const HarmonicExpansion& b) { return a -= b; }
    friend HarmonicExpansion operator*(double s, HarmonicExpansion a) { return a *= s; }

    //! Largest coefficient magnitude.
    double max_abs() const {
        double m = 0;
        for (double c : coeffs_)
            m = std::max(m, std::abs(c));
        return m;
    }

    //! Multiply band k by lambda(k).
    template<class F>
    HarmonicExpansion band_scaled(F&& lambda) const {
        HarmonicExpansion out = *this;
        for (int k = 0; k <= K_; ++k) {
            double l = lambda(k);
            for (int m = -k; m <= k; ++m)
                out.coeffs_[harmonic_index(k, m)] *= l;
        }
        return out;
    }

  private:
    void check_degree(int k) const {
        if (k < 0 || k > K_)
            throw InputError("band degree outside the expansion");
    }
    void check_same(const HarmonicExpansion& o) const {
        if (o.K_ != K_)
            throw InputError("expansions of different degree");
    }

    int K_ = 0;
    std::vector<double> coeffs_;
    std::string grid_;
};

inline std::string grid_label(const SphereGrid& grid) {
    return "gauss" + std::to_string(grid.n_theta()) + "x" + std::to_string(grid.n_phi());
}

//! Coefficients of f by the product rule on the grid.
template<class F>
    requires std::is_invocable_r_v<double, F, const Vec3&>
HarmonicExpansion expand(F&& f, int max_degree, const SphereGrid& grid = SphereGrid()) {
    HarmonicExpansion out(max_degree, grid_label(grid));
    RealHarmonics y(max_degree);
    std::vector<double> buf(y.size());
    auto& c = out.coefficients();
    const auto& dirs = grid.directions();
    const auto& w = grid.weights();
    for (size_t i = 0; i < dirs.size(); ++i) {
        y.evaluate(dirs[i], buf.data());
        double fw = w[i] * f(dirs[i]);
        for (size_t j = 0; j < buf.size(); ++j)
            c[j] += fw * buf[j];
    }
    return out;
}

//! Coefficients of the density of mu with respect to the probability
//! measure: f_km = sum_i a_i Y_km(u_i). This equals expanding
//! pi_k mu = (2k+1) mu * P_k and needs no quadrature.
inline HarmonicExpansion expand(const DiscreteSurfaceMeasure& mu, int max_degree) {
    HarmonicExpansion out(max_degree, "exact");
    RealHarmonics y(max_degree);
    std::vector<double> buf(y.size());
    auto& c = out.coefficients();
    for (const auto& a : mu.atoms()) {
        y.evaluate(a.normal, buf.data());
        for (size_t j = 0; j < buf.size(); ++j)
            c[j] += a.weight * buf[j];
    }
    return out;
}

//! Band k only.
inline HarmonicExpansion project(const HarmonicExpansion& f, int k) {
    if (k < 0 || k > f.max_degree())
        throw InputError("projection degree exceeds the expansion degree");
    return f.band_scaled([k](int j) { return j == k ? 1.0 : 0.0; });
}

inline HarmonicExpansion apply_multiplier(const HarmonicExpansion& f, const MultiplierSequence& c) {
    if (c.dimension != 3)
        throw DimensionError("multiplier sequence is not for S^2");
    if (c.max_degree() < f.max_degree())
        throw InputError("multiplier sequence does not cover all bands");
    return f.band_scaled([&](int k) { return c[k]; });
}

//! Eigenvalue of Delta_1 = Delta_0 + 2 on band k of S^2.
inline double delta1_eigenvalue(int k) { return 2.0 - k * (k + 1.0); }

//! Delta_1 f, band k scaled by 2 - k(k+1). For a support function h(K,.)
//! the density of the first area measure is delta1(h) / 2 (see
//! SpectralBody::first_area_density).
inline HarmonicExpansion delta1(const HarmonicExpansion& f) {
    return f.band_scaled(delta1_eigenvalue);
}

//! Max over basis harmonics H of degree k and test directions u of
//! |(H * g)(u) - c_k H(u)|, with (H * g) by quadrature in the frame of u.
inline double funk_hecke_check(const ZonalProfile& g, int k, int n = 3, int test_points = 20) {
    if (n != 3)
        throw DimensionError("basis harmonics are implemented for S^2 only");
    if (k < 0)
        throw InputError("degree must be nonnegative");
    const double ck = legendre_coefficients(g, 3, k)[k];
    RealHarmonics y(k);
    const int order = std::max(32, k + 16);
    ZonalFrameRule rule(g.breakpoints(), order, 2 * k + 32);
    double residual = 0;
    std::vector<double> buf(y.size());
    for (const Vec3& u : fibonacci_directions(test_points)) {
        Eigen::VectorXd conv = rule.integrate_vector(
            u, [&](double t) { return g(t); },
            [&](const Vec3& w) {
                y.evaluate(w, buf.data());
                return Eigen::Map<const Eigen::VectorXd>(buf.data() + k * k, 2 * k + 1).eval();
            },
            2 * k + 1);
        y.evaluate(u, buf.data());
        for (int m = 0; m < 2 * k + 1; ++m)
            residual = std::max(residual, std::abs(conv[m] - ck * buf[k * k + m]));
    }
    return residual;
}

//---------------------------------------------------------------------------//
//! Support function represented by its harmonic expansion.
//! Optionally carries the expansion of the density of S_2(K,.) with respect
//! to the probability measure, which is not a linear function of h.
class SpectralBody {
  public:
    SpectralBody() = default;
    explicit SpectralBody(HarmonicExpansion h) : h_(std::move(h)) {}
    SpectralBody(HarmonicExpansion h, HarmonicExpansion area)
        : h_(std::move(h)), area_(std::move(area)), has_area_(true) {}

    template<SupportFunction Body>
    static SpectralBody from_body(const Body& body, int max_degree = 12,
                                  const SphereGrid& grid = SphereGrid()) {
        return SpectralBody(
            expand([&](const Vec3& u) { return body.support(u); }, max_degree, grid));
    }

    //! Support function and curvature density 4 pi * r_1 r_2.
    static SpectralBody from_ellipsoid(const Ellipsoid& e, int max_degree = 12,
                                       const SphereGrid& grid = SphereGrid()) {
        auto area = expand([&](const Vec3& u) { return e.radii_product(u); }, max_degree, grid);
        return {from_body(e, max_degree, grid).h_, 4.0 * pi * area};
    }

    //! Support function on the grid and the exact atom expansion of S_2.
    static SpectralBody from_polytope(const Polytope3& p, int max_degree = 12,
                                      const SphereGrid& grid = SphereGrid()) {
        return {from_body(p, max_degree, grid).h_, expand(surface_measure(p), max_degree)};
    }

    bool has_area_density() const { return has_area_; }
    const HarmonicExpansion& area_density() const {
        if (!has_area_)
            throw InputError("spectral body carries no surface area density");
        return area_;
    }

    const HarmonicExpansion& expansion() const { return h_; }
    int max_degree() const { return h_.max_degree(); }
    double support(const Vec3& u) const { return h_.evaluate(u); }

    //! Steiner point from the degree-1 block: pi_1 h(u) = s . u.
    Vec3 steiner_point() const {
        if (h_.max_degree() < 1)
            return Vec3::Zero();
        // h_1m = s . e / sqrt(3) for the matching axis e
        return Vec3(h_(1, 1), h_(1, -1), h_(1, 0)) * std::sqrt(3.0);
    }

    //! Density of S_1(K,.) with respect to surface area: Delta_1 h / 2, so
    //! that the unit ball has density 1 like its surface area measure.
    HarmonicExpansion first_area_density() const { return 0.5 * delta1(h_); }

    //! W_2 = kappa_3 * mean(h).
    double mean_width_quermass() const { return kappa(3) * h_(0, 0); }

    //! W_1 = V(K, K, B) = (1/3) int h dS_1 = (2 pi / 3) sum (2 - k(k+1)) |h_k|^2.
    double w1() const {
        double s = 0;
        for (int k = 0; k <= h_.max_degree(); ++k)
            s += delta1_eigenvalue(k) * h_.band_norm(k) * h_.band_norm(k);
        return 2.0 * pi / 3.0 * s;
    }

    //! Mixed W_1(K, L) = V(K, L, B) = (1/3) int h_K dS_1(L).
    double mixed_w1(const SpectralBody& l) const {
        const int K = std::min(max_degree(), l.max_degree());
        double s = 0;
        for (int k = 0; k <= K; ++k)
            for (int m = -k; m <= k; ++m)
                s += delta1_eigenvalue(k) * h_(k, m) * l.h_(k, m);
        return 2.0 * pi / 3.0 * s;
    }

  private:
    HarmonicExpansion h_;
    HarmonicExpansion area_;
    bool has_area_ = false;
};

} // namespace bmh
