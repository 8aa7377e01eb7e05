// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/inequalities.hpp
//! Quermassintegral inequalities for Blaschke-Minkowski homomorphisms in
//! dimension 3, where the induced family is {Phi_0 = Phi, Phi_1, const}.
//! Smooth bodies go through the spectral route; polytopes through exact
//! atom sums and, for zonotope kernels, exact realizations.
//---------------------------------------------------------------------------//
#pragma once

#include "homomorphism.hpp"
#include "report.hpp"

#include <string>
#include <vector>

namespace bmh {

inline constexpr double default_inequality_tol = 1e-8;
inline constexpr double ball_equality_tol = 1e-6;

//! W_2(K)^2 >= kappa_3 / r^2 W_1(Phi_1 K) >= kappa_3 W_1(K). For a ball both
//! sides must agree within ball_equality_tol and the rows are flagged.
inline std::vector<CheckResult> quermass_chain(const BMHomomorphism& phi, const SpectralBody& k,
                                               bool is_ball = false,
                                               double tol = default_inequality_tol,
                                               const std::string& prefix = "chain") {
    const double r = phi.radius(), k3 = kappa(3);
    const double w2 = k.mean_width_quermass();
    const double w1_phi1 = phi.apply_spectral(k, 1).w1();
    const double left = w2 * w2, middle = k3 / (r * r) * w1_phi1, right = k3 * k.w1();
    std::vector<CheckResult> out{inequality_check(prefix + ".upper", left, middle, tol),
                                 inequality_check(prefix + ".lower", middle, right, tol)};
    if (is_ball)
        for (auto& c : out) {
            c.tol = ball_equality_tol;
            c.status = std::abs(c.slack) <= ball_equality_tol ? "pass" : "fail";
            c.flag = "equality(ball)";
        }
    return out;
}

//! W_1(K)^3 >= kappa_3^2 / r^3 V(Phi K), needing the volume of Phi K. Only
//! kernels with zonotope images give an exact volume, so other kernels
//! yield no row.
inline std::vector<CheckResult> volume_upper_bound(const BMHomomorphism& phi, const Polytope3& k,
                                                   double tol = default_inequality_tol,
                                                   const std::string& prefix = "upper_bound.i0") {
    if (!phi.zonotope_images())
        return {};
    const double v = zonotope_volume(phi.zonotope_generators(surface_measure(k)));
    const double w1 = quermassintegrals(k)[1], r = phi.radius(), k3 = kappa(3);
    return {inequality_check(prefix, w1 * w1 * w1, k3 * k3 / (r * r * r) * v, tol)};
}

//! psi_0(K) = V(Phi K) / V(K)^2 >= psi_0(Phi K), for zonotope kernels. The
//! zonotopes are never built: volumes are determinant sums and S(Phi K) is
//! read off the generators. Phi^2 K has O(f^2) generators for f facets and
//! the volume costs their cube, so keep f small.
inline std::vector<CheckResult> psi0_check(const BMHomomorphism& phi, const Polytope3& k,
                                           double tol = default_inequality_tol,
                                           const std::string& prefix = "psi.i0") {
    if (!phi.zonotope_images())
        return {};
    const auto g1 = phi.zonotope_generators(surface_measure(k));
    const auto g2 = phi.zonotope_generators(zonotope_surface_measure(g1));
    const double v0 = k.volume(), v1 = zonotope_volume(g1), v2 = zonotope_volume(g2);
    return {inequality_check(prefix, v1 / (v0 * v0), v2 / (v1 * v1), tol)};
}

//! Relative L2 distance of h(L) from the best multiple of h(K), ignoring
//! degree 1 (translations). Zero iff K and L are homothetic up to
//! truncation.
inline double homothety_defect(const HarmonicExpansion& k, const HarmonicExpansion& l) {
    const int K = std::min(k.max_degree(), l.max_degree());
    double kk = 0, kl = 0, ll = 0;
    for (int d = 0; d <= K; ++d) {
        if (d == 1)
            continue;
        for (int m = -d; m <= d; ++m) {
            kk += k(d, m) * k(d, m);
            kl += k(d, m) * l(d, m);
            ll += l(d, m) * l(d, m);
        }
    }
    if (ll <= 0)
        return 0;
    double lambda = kk > 0 ? kl / kk : 0;
    return std::sqrt(std::max(0.0, ll - 2 * lambda * kl + lambda * lambda * kk) / ll);
}

//! psi_1(K) = W_1(Phi_1 K) / W_1(K) >= psi_1(Phi_1 K), plus the measured
//! homothety defect between K and Phi_1^2 K. Skipped when W_1(K) <= wtol.
inline std::vector<CheckResult> psi1_check(const BMHomomorphism& phi, const SpectralBody& k,
                                           double tol = default_inequality_tol,
                                           const std::string& prefix = "psi.i1",
                                           double wtol = 1e-12) {
    const SpectralBody p1 = phi.apply_spectral(k, 1);
    const SpectralBody p2 = phi.apply_spectral(p1, 1);
    const double w0 = k.w1(), w1 = p1.w1(), w2 = p2.w1();
    if (w0 <= wtol || w1 <= wtol)
        return {};
    return {inequality_check(prefix, w1 / w0, w2 / w1, tol),
            measured(prefix + ".homothety_defect", homothety_defect(k.expansion(), p2.expansion()))};
}

//! V_1(K, Phi L) = V_1(L, Phi K), both sides exact atom sums.
inline CheckResult mixed_symmetry_i0(const BMHomomorphism& phi, const DiscreteSurfaceMeasure& k,
                                     const DiscreteSurfaceMeasure& l, double tol = 1e-9,
                                     const std::string& id = "mixed_symmetry.i0") {
    auto v1 = [&](const DiscreteSurfaceMeasure& a, const DiscreteSurfaceMeasure& b) {
        double s = 0;
        for (const auto& at : a.atoms())
            s += at.weight * phi.support(b, at.normal);
        return s / 3.0;
    };
    return identity_check(id, v1(k, l), v1(l, k), tol);
}

//! W_1(K, Phi_1 L) = W_1(L, Phi_1 K) on spectral bodies.
inline CheckResult mixed_symmetry_i1(const BMHomomorphism& phi, const SpectralBody& k,
                                     const SpectralBody& l, double tol = 1e-9,
                                     const std::string& id = "mixed_symmetry.i1") {
    return identity_check(id, phi.apply_spectral(l, 1).mixed_w1(k),
                          phi.apply_spectral(k, 1).mixed_w1(l), tol);
}

//! Shephard-type implication for i = 0: L = Phi L0 is scaled until
//! Phi K is contained in Phi L on the directions (with a relative margin),
//! then V(K) <= V(L) must hold. Zonotope kernels only, so that L is exact.
inline std::vector<CheckResult> shephard_check(const BMHomomorphism& phi, const Polytope3& k,
                                               const Polytope3& l0, std::span<const Vec3> dirs,
                                               double margin = 1e-3,
                                               double tol = default_inequality_tol,
                                               const std::string& id = "shephard.i0") {
    if (!phi.zonotope_images())
        return {};
    const auto gens = phi.zonotope_generators(surface_measure(l0));
    const auto mk = surface_measure(k), ml = zonotope_surface_measure(gens);
    double ratio = 0;
    for (const auto& u : dirs)
        ratio = std::max(ratio, phi.support(mk, u) / phi.support(ml, u));
    // Phi is homogeneous of degree 2, so L scales by s^(1/2) and V by s^(3/2)
    const double s = ratio * (1 + margin);
    return {inequality_check(id, zonotope_volume(gens) * std::pow(s, 1.5), k.volume(), tol)};
}

} // namespace bmh
