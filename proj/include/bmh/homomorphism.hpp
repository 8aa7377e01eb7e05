// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/homomorphism.hpp
//! Blaschke-Minkowski homomorphisms h(Phi K, .) = S_2(K, .) * g and the
//! induced family Phi_i.
//---------------------------------------------------------------------------//
#pragma once

#include "bodies.hpp"
#include "halfspace.hpp"
#include "harmonics.hpp"
#include "measure.hpp"
#include "polytope.hpp"
#include "quadrature.hpp"
#include "zonal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmh {

//! The body Phi K given by its support function, an exact atom sum.
class HomomorphismImage {
  public:
    HomomorphismImage(DiscreteSurfaceMeasure mu, ZonalProfile g)
        : mu_(std::move(mu)), g_(std::move(g)) {}

    double support(const Vec3& u) const { return convolve_measure(mu_, g_, u); }
    const DiscreteSurfaceMeasure& measure() const { return mu_; }

  private:
    DiscreteSurfaceMeasure mu_;
    ZonalProfile g_;
};

struct Realization {
    Polytope3 body;
    bool exact = false;     //!< zonotope with the exact support function
    double mismatch = 0;    //!< sample mismatch of the halfspace route
};

class BMHomomorphism {
  public:
    //! \throws InputError if g is not weakly positive
    explicit BMHomomorphism(ZonalProfile g, int max_degree = 12)
        : g_(std::move(g)), certificate_(weakly_positive(g_)) {
        if (!certificate_.weakly_positive)
            throw InputError("kernel '" + g_.label() + "' is not weakly positive");
        c_ = legendre_coefficients(g_, 3, max_degree);
        radius_ = c_[0] * omega(3);
        // kernels whose images are zonotopes with generators scale * a_i u_i
        if (g_.label() == "projection")
            zonotope_scale_ = 0.5;
        else if (g_.label() == "segment_support")
            zonotope_scale_ = 1.0;
    }

    const ZonalProfile& profile() const { return g_; }
    const std::string& label() const { return g_.label(); }
    const MultiplierSequence& multipliers() const { return c_; }
    const WeakPositivity& certificate() const { return certificate_; }
    //! r_Phi: Phi B^3 is the ball of this radius.
    double radius() const { return radius_; }

    //! All multipliers up to the table degree are nonzero.
    bool bandlimited_injective(double tol = 1e-12) const {
        for (double c : c_.c)
            if (std::abs(c) <= tol)
                return false;
        return true;
    }

    double support(const DiscreteSurfaceMeasure& mu, const Vec3& u) const {
        return convolve_measure(mu, g_, u);
    }

    //! \throws DimensionError for a degenerate polytope
    HomomorphismImage image(const Polytope3& k) const { return {surface_measure(k), g_}; }
    HomomorphismImage image(const DiscreteSurfaceMeasure& mu) const { return {mu, g_}; }

    SupportSampleBody apply(const DiscreteSurfaceMeasure& mu,
                            const SphereGrid& grid = SphereGrid()) const {
        return SupportSampleBody::sample(image(mu), grid);
    }
    SupportSampleBody apply(const Polytope3& k, const SphereGrid& grid = SphereGrid()) const {
        return apply(surface_measure(k), grid);
    }

    bool zonotope_images() const { return zonotope_scale_.has_value(); }

    //! Generators of Phi K as a zonotope sum [-g_i, g_i], for kernels that
    //! have one (empty otherwise).
    std::vector<Vec3> zonotope_generators(const DiscreteSurfaceMeasure& mu) const {
        std::vector<Vec3> gens;
        if (zonotope_scale_)
            for (const auto& a : mu.atoms())
                gens.push_back(*zonotope_scale_ * a.weight * a.normal);
        return gens;
    }

    //! A polytope for Phi K: the exact zonotope where available, otherwise
    //! the halfspace intersection of the samples on the grid.
    Realization realize(const DiscreteSurfaceMeasure& mu,
                        const SphereGrid& grid = SphereGrid(16, 32)) const {
        Realization out;
        if (zonotope_scale_) {
            out.body = make_zonotope(zonotope_generators(mu));
            out.exact = true;
            return out;
        }
        auto r = body_from_support_samples(apply(mu, grid));
        out.body = std::move(r.body);
        out.mismatch = r.mismatch;
        return out;
    }
    Realization realize(const Polytope3& k, const SphereGrid& grid = SphereGrid(16, 32)) const {
        return realize(surface_measure(k), grid);
    }

    //! Phi_i of a spectral body: band k of the result is c_k times band k of
    //! the density of S_{2-i}(K,.) with respect to the probability measure.
    //! i = 0 needs the S_2 density; i = 1 uses S_1 = 4 pi Delta_1 h / 2.
    SpectralBody apply_spectral(const SpectralBody& h, int i) const {
        if (i != 0 && i != 1)
            throw InputError("Steiner index must be 0 or 1 on S^2");
        const HarmonicExpansion& src = i == 0 ? h.area_density() : h.expansion();
        if (src.max_degree() > c_.max_degree())
            throw InputError("multiplier table shorter than the expansion");
        return SpectralBody(src.band_scaled([&](int k) {
            return i == 0 ? c_[k] : c_[k] * 2.0 * pi * delta1_eigenvalue(k);
        }));
    }

  private:
    ZonalProfile g_;
    WeakPositivity certificate_;
    MultiplierSequence c_;
    double radius_ = 0;
    std::optional<double> zonotope_scale_;
};

//! Spherical mean of Lambda g by a rule with its pole at the kernel axis.
inline double zonal_mean(const ZonalProfile& g, int order = 48) {
    ZonalFrameRule rule(g.breakpoints(), order, 1);
    return rule.integrate(Vec3::UnitZ(), [&](double t) { return g(t); },
                          [](const Vec3&) { return 1.0; });
}

//! W_2(Phi K) = kappa_3 * mean h(Phi K, .), integrating the atom sum term
//! by term in frames whose poles are the atom normals (the product grid
//! cannot resolve the kinks of h(Phi K, .) along great circles).
inline double image_mean_width_quermass(const BMHomomorphism& phi, const DiscreteSurfaceMeasure& mu,
                                        int order = 48) {
    const ZonalProfile& g = phi.profile();
    ZonalFrameRule rule(g.breakpoints(), order, 1);
    double mean = 0;
    for (const auto& a : mu.atoms())
        mean += a.weight * rule.integrate(a.normal, [&](double t) { return g(t); },
                                          [](const Vec3&) { return 1.0; });
    return kappa(3) * mean;
}

//! Harmonic coefficients of h(Phi K, .) by quadrature, atom by atom in
//! frames aligned with the atom normals.
inline HarmonicExpansion expand_image(const BMHomomorphism& phi, const DiscreteSurfaceMeasure& mu,
                                      int max_degree, int order = 32) {
    const ZonalProfile& g = phi.profile();
    ZonalFrameRule rule(g.breakpoints(), order, 2 * max_degree + 8);
    RealHarmonics y(max_degree);
    HarmonicExpansion out(max_degree, "frame");
    std::vector<double> buf(y.size());
    Eigen::Map<Eigen::VectorXd> acc(out.coefficients().data(), y.size());
    for (const auto& a : mu.atoms())
        acc += a.weight * rule.integrate_vector(
                              a.normal, [&](double t) { return g(t); },
                              [&](const Vec3& w) {
                                  y.evaluate(w, buf.data());
                                  return Eigen::Map<const Eigen::VectorXd>(buf.data(), y.size()).eval();
                              },
                              y.size());
    return out;
}

//! Max over eps and a check grid of |h(Phi(K + eps B)) - sum_i eps^i
//! binom(2,i) h(Phi_i K)|. The left side expands the curvature density of
//! the parallel body, det(D^2 h + eps I) on the tangent plane; the right
//! side is spectral.
inline double steiner_decomposition_check(const BMHomomorphism& phi, const Ellipsoid& k,
                                          std::span<const double> eps, int max_degree = 12) {
    SphereGrid grid;
    SpectralBody base = SpectralBody::from_ellipsoid(k, max_degree, grid);
    SpectralBody phi0 = phi.apply_spectral(base, 0);
    SpectralBody phi1 = phi.apply_spectral(base, 1);
    SphereGrid check(24, 48);
    double residual = 0;
    for (double e : eps) {
        auto area = expand(
            [&](const Vec3& u) {
                Mat3 hess = k.support_hessian(u);
                auto [e1, e2] = orthonormal_complement(u);
                double a = e1.dot(hess * e1) + e, b = e1.dot(hess * e2),
                       d = e2.dot(hess * e2) + e;
                return 4.0 * pi * (a * d - b * b);
            },
            max_degree, grid);
        SpectralBody lhs = phi.apply_spectral(SpectralBody(base.expansion(), area), 0);
        for (const auto& u : check.directions()) {
            double rhs = phi0.support(u) + 2 * e * phi1.support(u) + e * e * phi.radius();
            residual = std::max(residual, std::abs(lhs.support(u) - rhs));
        }
    }
    return residual;
}

} // namespace bmh
