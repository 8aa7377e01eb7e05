// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/endomorphism.hpp
//! Minkowski endomorphisms h(Psi L, .) = h(L, .) * mu, Blaschke
//! endomorphisms S_2(Psi* K, .) = S_2(K, .) * mu, and the commutation of
//! both with a Blaschke-Minkowski homomorphism.
//---------------------------------------------------------------------------//
#pragma once

#include "homomorphism.hpp"
#include "measure.hpp"
#include "quadrature.hpp"
#include "random.hpp"
#include "zonal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmh {

//! Zonal generating measure: an optional density part Lambda mu(t) (with
//! respect to the probability measure) plus circle measures.
struct ZonalGenerator {
    std::optional<ZonalProfile> density;
    ZonalMeasureAtoms rings;
    std::string label;

    static ZonalGenerator identity() { return {std::nullopt, ZonalMeasureAtoms::dirac(), "dirac"}; }
    static ZonalGenerator from_profile(ZonalProfile p) {
        std::string l = p.label();
        return {std::move(p), {}, l};
    }

    std::vector<double> legendre_coefficients(int max_degree) const {
        std::vector<double> c = rings.legendre_coefficients(3, max_degree);
        if (density) {
            auto d = bmh::legendre_coefficients(*density, 3, max_degree);
            for (int k = 0; k <= max_degree; ++k)
                c[k] += d[k];
        }
        return c;
    }

    //! Throws unless the generator is weakly positive and not linear.
    void validate() const {
        for (const auto& r : rings.rings)
            if (!(r.mass >= 0) || r.t < -1 || r.t > 1)
                throw InputError("ring measures need nonnegative mass and t in [-1, 1]");
        if (density && !weakly_positive(*density).weakly_positive)
            throw InputError("generating measure '" + label + "' is not weakly positive");
        auto c = legendre_coefficients(6);
        bool linear = true;
        for (int k = 0; k <= 6; ++k)
            linear &= k == 1 || std::abs(c[k]) <= 1e-12;
        if (linear)
            throw InputError("generating measure '" + label + "' is linear");
    }
};

//! Per-atom quadrature used when an endomorphism meets a general body.
struct EndomorphismQuadrature {
    int order = 16;   //!< Gauss points per polar panel
    int n_phi = 32;   //!< azimuth points
};

class MinkowskiEndomorphism {
  public:
    explicit MinkowskiEndomorphism(ZonalGenerator mu, EndomorphismQuadrature q = {})
        : mu_(std::move(mu)), q_(q) {
        mu_.validate();
        if (mu_.density)
            rule_.emplace(mu_.density->breakpoints(), q_.order, q_.n_phi);
    }

    const ZonalGenerator& generator() const { return mu_; }

    //! h(Psi L, u) = int h_L(w) Lambda mu(u.w) dw + rings, by quadrature in
    //! the frame of u.
    template<SupportFunction Body>
    double support(const Body& l, const Vec3& u) const {
        require_unit(u);
        double v = 0;
        if (rule_)
            v += rule_->integrate(u, *mu_.density, [&](const Vec3& w) { return l.support(w); });
        auto [e1, e2] = orthonormal_complement(u);
        for (const auto& r : mu_.rings.rings) {
            double st = std::sqrt(std::max(0.0, 1 - r.t * r.t));
            double ring = 0;
            for (int j = 0; j < q_.n_phi; ++j) {
                double phi = 2 * pi * (j + 0.5) / q_.n_phi;
                Vec3 w = r.t * u + st * (std::cos(phi) * e1 + std::sin(phi) * e2);
                ring += l.support(w.normalized());
            }
            v += r.mass * ring / q_.n_phi;
        }
        return v;
    }

  private:
    ZonalGenerator mu_;
    EndomorphismQuadrature q_;
    std::optional<ZonalFrameRule> rule_;
};

class BlaschkeEndomorphism {
  public:
    explicit BlaschkeEndomorphism(ZonalGenerator mu, EndomorphismQuadrature q = {})
        : mu_(std::move(mu)), q_(q) {
        mu_.validate();
        if (mu_.density)
            rule_.emplace(mu_.density->breakpoints(), q_.order, q_.n_phi);
    }

    const ZonalGenerator& generator() const { return mu_; }

    //! Density of the absolutely continuous part of S_2(Psi* K, .) with
    //! respect to the probability measure: sum_i a_i Lambda mu(v.u_i).
    double density(const DiscreteSurfaceMeasure& k, const Vec3& v) const {
        return mu_.density ? convolve_measure(k, *mu_.density, v) : 0.0;
    }

    //! int f dS_2(Psi* K, .) by quadrature around every atom of S_2(K,.).
    template<class F>
    double integrate(const DiscreteSurfaceMeasure& k, F&& f) const {
        double total = 0;
        for (const auto& a : k.atoms()) {
            double v = 0;
            if (rule_)
                v += rule_->integrate(a.normal, *mu_.density, f);
            auto [e1, e2] = orthonormal_complement(a.normal);
            for (const auto& r : mu_.rings.rings) {
                double st = std::sqrt(std::max(0.0, 1 - r.t * r.t));
                double ring = 0;
                for (int j = 0; j < q_.n_phi; ++j) {
                    double phi = 2 * pi * (j + 0.5) / q_.n_phi;
                    ring += f(Vec3(r.t * a.normal + st * (std::cos(phi) * e1 + std::sin(phi) * e2))
                                  .normalized());
                }
                v += r.mass * ring / q_.n_phi;
            }
            total += a.weight * v;
        }
        return total;
    }

    //! Total mass and moment of S_2(Psi* K, .); the moment vanishes for a
    //! surface area measure.
    double total_mass(const DiscreteSurfaceMeasure& k) const {
        return integrate(k, [](const Vec3&) { return 1.0; });
    }
    Vec3 moment(const DiscreteSurfaceMeasure& k) const {
        Vec3 m;
        for (int i = 0; i < 3; ++i)
            m[i] = integrate(k, [i](const Vec3& w) { return w[i]; });
        return m;
    }

    //! V_1(Psi* K, L) = (1/3) int h_L dS_2(Psi* K, .).
    template<SupportFunction Body>
    double mixed_volume_v1(const DiscreteSurfaceMeasure& k, const Body& l) const {
        return integrate(k, [&](const Vec3& w) { return l.support(w); }) / 3.0;
    }

  private:
    ZonalGenerator mu_;
    EndomorphismQuadrature q_;
    std::optional<ZonalFrameRule> rule_;
};

struct AdjointPair {
    MinkowskiEndomorphism psi;
    BlaschkeEndomorphism psi_star;
};

inline AdjointPair adjoint_pair(const ZonalGenerator& mu, EndomorphismQuadrature q = {}) {
    return {MinkowskiEndomorphism(mu, q), BlaschkeEndomorphism(mu, q)};
}

//! sum_i a_i h(Psi L, u_i) / 3, the other side of the adjointness identity.
template<SupportFunction Body>
double mixed_volume_v1(const DiscreteSurfaceMeasure& k, const MinkowskiEndomorphism& psi,
                       const Body& l) {
    double v = 0;
    for (const auto& a : k.atoms())
        v += a.weight * psi.support(l, a.normal);
    return v / 3.0;
}

//! Largest value of h(x + y) - h(x) - h(y) over random pairs, h extended
//! 1-homogeneously; negative or tiny for support functions.
template<class H>
double sublinearity_defect(H&& h, std::uint64_t seed = 0, int pairs = 200) {
    Rng rng(seed);
    double worst = -std::numeric_limits<double>::infinity();
    auto ext = [&](const Vec3& x) {
        double r = x.norm();
        return r * h(Vec3(x / r));
    };
    for (int i = 0; i < pairs; ++i) {
        Vec3 x = rng.direction() * rng.uniform(0.2, 1.0);
        Vec3 y = rng.direction() * rng.uniform(0.2, 1.0);
        if ((x + y).norm() < 1e-6)
            continue;
        worst = std::max(worst, ext(x + y) - ext(x) - ext(y));
    }
    return worst;
}

//---------------------------------------------------------------------------//
// Commutation Phi o Psi* = Psi o Phi
//---------------------------------------------------------------------------//

//! Both sides of the commutation identity as functions of the direction.
//! Route A, h(Phi(Psi* K), u) = sum_i a_i [Z(mu*, g)(u.u_i) + rings], with
//! the pair integral taken with the outer variable on the Psi* side; route
//! B, h(Psi(Phi K), u), takes the outer variable on the Phi side. The pair
//! integrals are tabulated once per route.
class CommutationRoutes {
  public:
    CommutationRoutes(const BMHomomorphism& phi, const MinkowskiEndomorphism& psi,
                      const BlaschkeEndomorphism& psi_star, int pair_order = 64)
        : g_(phi.profile()), a_rings_(psi_star.generator().rings),
          b_rings_(psi.generator().rings) {
        if (psi_star.generator().density)
            a_table_ = tabulate(convolve_profiles(*psi_star.generator().density, g_, pair_order));
        if (psi.generator().density)
            b_table_ = tabulate(convolve_profiles(g_, *psi.generator().density, pair_order));
    }

    double route_a(const DiscreteSurfaceMeasure& k, const Vec3& u) const {
        return evaluate(k, u, a_table_, a_rings_);
    }
    double route_b(const DiscreteSurfaceMeasure& k, const Vec3& u) const {
        return evaluate(k, u, b_table_, b_rings_);
    }

    //! max over the directions of |route A - route B|
    double residual(const DiscreteSurfaceMeasure& k, std::span<const Vec3> directions) const {
        double r = 0;
        for (const auto& u : directions)
            r = std::max(r, std::abs(route_a(k, u) - route_b(k, u)));
        return r;
    }

  private:
    double evaluate(const DiscreteSurfaceMeasure& k, const Vec3& u,
                    const std::optional<ZonalProfile>& table, const ZonalMeasureAtoms& rings) const {
        double v = 0;
        for (const auto& a : k.atoms()) {
            double s = u.dot(a.normal);
            double x = table ? (*table)(s) : 0.0;
            for (const auto& r : rings.rings)
                x += r.mass * circle_average(g_, s, r.t);
            v += a.weight * x;
        }
        return v;
    }

    ZonalProfile g_;
    std::optional<ZonalProfile> a_table_, b_table_;
    ZonalMeasureAtoms a_rings_, b_rings_;
};

//! Max deviation between h(Phi(Psi* K), .) and h(Psi(Phi K), .) on the grid.
inline double commutation_check(const BMHomomorphism& phi, const MinkowskiEndomorphism& psi,
                                const BlaschkeEndomorphism& psi_star,
                                const DiscreteSurfaceMeasure& k,
                                const SphereGrid& grid = SphereGrid(16, 32)) {
    return CommutationRoutes(phi, psi, psi_star).residual(k, grid.directions());
}

} // namespace bmh
