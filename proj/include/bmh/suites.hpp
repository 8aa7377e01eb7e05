// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/suites.hpp
//! Verification suites behind `bmh check`: identities, inequalities,
//! endomorphisms and Minkowski round trips over seeded random bodies plus a
//! fixed canned set. Reports contain no timings, so equal configurations
//! give byte-identical output.
//---------------------------------------------------------------------------//
#pragma once

#include "endomorphism.hpp"
#include "homomorphism.hpp"
#include "inequalities.hpp"
#include "minkowski.hpp"
#include "random.hpp"
#include "report.hpp"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace bmh {

inline constexpr const char* version = "0.1.0";

struct SuiteConfig {
    std::uint64_t seed = 0;
    int count = 10;
    std::optional<double> tol;   //!< replaces every default tolerance
    int grid_theta = 64;
    int grid_phi = 128;
    int max_degree = 12;
    int check_theta = 16;        //!< grid for pointwise comparisons
    int check_phi = 32;

    SphereGrid grid() const { return SphereGrid(grid_theta, grid_phi); }
    SphereGrid check_grid() const { return SphereGrid(check_theta, check_phi); }
    double tolerance(double fallback) const { return tol.value_or(fallback); }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "inequalities", "endomorphisms",
                                                "roundtrip"};
    return names;
}

namespace detail {

inline std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Report start_report(const std::string& suite, const SuiteConfig& c) {
    Report r;
    r.suite = suite;
    r.environment = {{"version", version},
                     {"seed", std::to_string(c.seed)},
                     {"count", std::to_string(c.count)},
                     {"tol", c.tol ? fmt_double(*c.tol) : "default"},
                     {"grid_theta", std::to_string(c.grid_theta)},
                     {"grid_phi", std::to_string(c.grid_phi)},
                     {"max_degree", std::to_string(c.max_degree)},
                     {"check_grid", std::to_string(c.check_theta) + "x" + std::to_string(c.check_phi)}};
    return r;
}

inline std::vector<std::pair<std::string, Polytope3>> canned_polytopes() {
    return {{"cube", make_cube()},
            {"simplex", make_regular_tetrahedron()},
            {"cross_polytope", make_cross_polytope()}};
}

inline std::vector<std::pair<std::string, Ellipsoid>> canned_ellipsoids() {
    return {{"spheroid", Ellipsoid(Vec3(1, 1, 2))},
            {"ellipsoid", Ellipsoid(Vec3(1, 1.5, 0.8), Rng(99).rotation())}};
}

//! Canned polytopes followed by `count` seeded random ones.
inline std::vector<std::pair<std::string, Polytope3>> test_polytopes(const SuiteConfig& c, Rng& rng) {
    auto out = canned_polytopes();
    for (int i = 0; i < c.count; ++i)
        out.emplace_back("random" + std::to_string(i), random_polytope(rng));
    return out;
}

inline std::vector<ZonalProfile> suite_kernels() {
    return {projection_kernel(), mean_section_kernel(), cap_kernel(0.5)};
}

} // namespace detail

//---------------------------------------------------------------------------//

inline Report identities_suite(const SuiteConfig& c) {
    Report rep = detail::start_report("identities", c);
    Rng rng(c.seed);
    const auto bodies = detail::test_polytopes(c, rng);
    const int mult_degree = std::min(8, c.max_degree);

    for (const auto& g : detail::suite_kernels()) {
        BMHomomorphism phi(g, c.max_degree);
        const std::string kl = g.label();
        for (int k = 0; k <= std::min(6, c.max_degree); ++k)
            rep.add(bound_check("funk_hecke." + kl + ".k" + std::to_string(k),
                                funk_hecke_check(g, k), c.tolerance(1e-8)));
        rep.add(identity_check("ball_radius." + kl, phi.radius(), 4 * pi * zonal_mean(g),
                               c.tolerance(1e-9)));
        for (size_t i = 0; i < bodies.size(); ++i) {
            const auto& [name, k] = bodies[i];
            const auto& l = bodies[(i + 1) % bodies.size()].second;
            const std::string id = kl + "." + name;
            auto mk = surface_measure(k), ml = surface_measure(l);

            rep.add(identity_check("mean_width." + id, image_mean_width_quermass(phi, mk),
                                   phi.radius() * quermassintegrals(k)[1], c.tolerance(1e-8)));

            auto mkl = blaschke_sum(mk, ml);
            const double lambda = rng.uniform(0.3, 3.0);
            auto scaled = mk.scaled(lambda * lambda);
            const Mat3 rot = rng.rotation();
            auto rotated = mk.rotated(rot);
            double add = 0, hom = 0, rotdev = 0;
            for (const auto& u : fibonacci_directions(20)) {
                const double hk = phi.support(mk, u), hl = phi.support(ml, u);
                add = std::max(add, std::abs(phi.support(mkl, u) - hk - hl) / std::max(1.0, hk + hl));
                hom = std::max(hom, std::abs(phi.support(scaled, u) - lambda * lambda * hk)
                                        / (lambda * lambda * hk));
                rotdev = std::max(rotdev, std::abs(phi.support(rotated, rot * u) - hk));
            }
            rep.add(bound_check("additivity." + id, add, c.tolerance(1e-12)));
            rep.add(bound_check("homogeneity." + id, hom, c.tolerance(1e-12)));
            rep.add(bound_check("rotation." + id, rotdev, c.tolerance(1e-10)));
            rep.add(mixed_symmetry_i0(phi, mk, ml, c.tolerance(1e-9), "mixed_symmetry.i0." + id));
            if (kl == "projection") {
                auto lhs = expand_image(phi, mk, mult_degree);
                auto rhs = apply_multiplier(expand(mk, mult_degree), phi.multipliers());
                rep.add(bound_check("multiplier." + id, (lhs - rhs).max_abs(), c.tolerance(1e-6)));
            }
        }
    }

    // closed forms for the projection kernel and the qualitative kernel checks
    auto cp = legendre_coefficients(projection_kernel(), 3, c.max_degree);
    rep.add(identity_check("multipliers.projection.c0", cp[0], 0.25, c.tolerance(1e-12)));
    double odd = 0;
    for (int k = 1; k <= cp.max_degree(); k += 2)
        odd = std::max(odd, std::abs(cp[k]));
    rep.add(bound_check("multipliers.projection.odd", odd, c.tolerance(1e-12)));

    const bool g2_wp = weakly_positive(mean_section_kernel()).weakly_positive;
    rep.add({"mean_section_g2.weakly_positive", g2_wp ? 1.0 : 0.0, 1.0, 0, 0, g2_wp ? "pass" : "fail", ""});
    auto g2s = is_support_profile(mean_section_kernel(), c.seed);
    rep.add({"mean_section_g2.not_support_profile", g2s.excess, 0.0, g2s.excess, 0,
             g2s.pass ? "fail" : "pass", ""});
    auto seg = is_support_profile(segment_support_kernel(), c.seed);
    rep.add({"segment_support.support_profile", seg.excess, 0.0, -seg.excess, 0,
             seg.pass ? "pass" : "fail", ""});
    return rep;
}

inline Report inequalities_suite(const SuiteConfig& c) {
    Report rep = detail::start_report("inequalities", c);
    Rng rng(c.seed);
    const SphereGrid grid = c.grid();
    const double tol = c.tolerance(default_inequality_tol);
    BMHomomorphism pi_(projection_kernel(), c.max_degree);

    // spectral route: ball, canned ellipsoids, random ellipsoids
    std::vector<std::pair<std::string, SpectralBody>> smooth;
    smooth.emplace_back("ball", SpectralBody::from_ellipsoid(Ellipsoid(Vec3(1, 1, 1)), c.max_degree, grid));
    for (const auto& [name, e] : detail::canned_ellipsoids())
        smooth.emplace_back(name, SpectralBody::from_ellipsoid(e, c.max_degree, grid));
    for (int i = 0; i < c.count; ++i)
        smooth.emplace_back("random" + std::to_string(i),
                            SpectralBody::from_ellipsoid(random_ellipsoid(rng), c.max_degree, grid));
    for (const auto& g : {projection_kernel(), mean_section_kernel()}) {
        BMHomomorphism phi(g, c.max_degree);
        for (size_t i = 0; i < smooth.size(); ++i) {
            const auto& [name, k] = smooth[i];
            const std::string id = g.label() + "." + name;
            auto chain = quermass_chain(phi, k, name == "ball", tol, "chain." + id);
            if (name == "ball" && c.tol)
                for (auto& row : chain) {
                    row.tol = *c.tol;
                    row.status = std::abs(row.slack) <= *c.tol ? "pass" : "fail";
                }
            rep.add(chain);
            rep.add(psi1_check(phi, k, tol, "psi.i1." + id));
            rep.add(mixed_symmetry_i1(phi, k, smooth[(i + 1) % smooth.size()].second,
                                      c.tolerance(1e-9), "mixed_symmetry.i1." + id));
        }
    }

    // polytope route, i = 0
    const auto bodies = detail::test_polytopes(c, rng);
    const auto dirs = fibonacci_directions(500);
    for (size_t i = 0; i < bodies.size(); ++i) {
        const auto& [name, k] = bodies[i];
        rep.add(volume_upper_bound(pi_, k, tol, "upper_bound.i0.projection." + name));
        rep.add(shephard_check(pi_, k, bodies[(i + 1) % bodies.size()].second, dirs, 1e-3, tol,
                               "shephard.i0.projection." + name));
    }
    // psi_0 needs V(Phi^2 K), a determinant sum cubic in the number of
    // generators, so it runs on polytopes with at most 12 facets
    auto small = detail::canned_polytopes();
    for (int i = 0; i < c.count; ++i)
        small.emplace_back("small" + std::to_string(i), random_polytope_with_facets(rng, 4, 12));
    for (const auto& [name, k] : small)
        rep.add(psi0_check(pi_, k, tol, "psi.i0.projection." + name));
    return rep;
}

inline Report endomorphisms_suite(const SuiteConfig& c) {
    Report rep = detail::start_report("endomorphisms", c);
    Rng rng(c.seed);
    const SphereGrid check = c.check_grid();
    const auto bodies = detail::test_polytopes(c, rng);

    std::vector<ZonalGenerator> gens{ZonalGenerator::identity(),
                                     ZonalGenerator::from_profile(cap_kernel(pi)),
                                     ZonalGenerator::from_profile(cap_kernel(0.5))};
    // adjointness and Blaschke endomorphism sanity
    for (const auto& mu : gens) {
        auto pair = adjoint_pair(mu);
        for (size_t i = 0; i < bodies.size(); ++i) {
            const auto& [name, k] = bodies[i];
            const auto& l = bodies[(i + 1) % bodies.size()].second;
            auto mk = surface_measure(k);
            const std::string id = mu.label + "." + name;
            rep.add(identity_check("adjoint." + id, pair.psi_star.mixed_volume_v1(mk, l),
                                   mixed_volume_v1(mk, pair.psi, l), c.tolerance(1e-9)));
            rep.add(bound_check("blaschke_moment." + id,
                                pair.psi_star.moment(mk).norm() / pair.psi_star.total_mass(mk),
                                c.tolerance(1e-9)));
            rep.add(bound_check("sublinearity." + id,
                                std::max(0.0, sublinearity_defect(
                                                  [&](const Vec3& u) { return pair.psi.support(l, u); },
                                                  c.seed, 50)),
                                c.tolerance(1e-6)));
        }
    }

    // commutation for every adjoint pair and two homomorphisms
    for (const auto& g : {projection_kernel(), mean_section_kernel()}) {
        BMHomomorphism phi(g, c.max_degree);
        for (const auto& mu : gens) {
            auto pair = adjoint_pair(mu);
            CommutationRoutes routes(phi, pair.psi, pair.psi_star);
            for (const auto& [name, k] : bodies)
                rep.add(bound_check("commutation." + g.label() + "." + mu.label + "." + name,
                                    routes.residual(surface_measure(k), check.directions()),
                                    c.tolerance(1e-9)));
        }
    }

    // a non-adjoint pair with a bandlimited-injective homomorphism: measured
    BMHomomorphism inj(cap_kernel(0.5), c.max_degree);
    MinkowskiEndomorphism psi(ZonalGenerator::from_profile(cap_kernel(0.5)));
    BlaschkeEndomorphism psi_star(ZonalGenerator::from_profile(cap_kernel(1.2)));
    CommutationRoutes routes(inj, psi, psi_star);
    double worst = 0;
    for (const auto& [name, k] : bodies)
        worst = std::max(worst, routes.residual(surface_measure(k), check.directions()));
    rep.add(measured("commutation.non_adjoint.cap0.5_vs_cap1.2", worst));
    rep.add(measured("injective.cap0.5", inj.bandlimited_injective() ? 1.0 : 0.0, 1.0));
    return rep;
}

inline Report roundtrip_suite(const SuiteConfig& c) {
    Report rep = detail::start_report("roundtrip", c);
    Rng rng(c.seed);
    std::vector<std::pair<std::string, Polytope3>> bodies = detail::canned_polytopes();
    for (int i = 0; i < c.count; ++i)
        bodies.emplace_back("random" + std::to_string(i), random_polytope_with_facets(rng, 4, 20));
    for (const auto& [name, p] : bodies) {
        auto mu = surface_measure(p);
        try {
            auto sol = solve_minkowski(mu);
            rep.add(bound_check("area_residual." + name, sol.max_relative_residual, c.tolerance(1e-6)));
            auto ref = p.translated(-steiner_point(p));
            double dev = 0;
            for (size_t j = 0; j < mu.size(); ++j)
                dev = std::max(dev, std::abs(sol.support[j] - ref.support(mu.atoms()[j].normal)));
            rep.add(bound_check("support_numbers." + name, dev, c.tolerance(1e-5)));
            double rise = 0;
            for (size_t j = 1; j < sol.log.size(); ++j)
                rise = std::max(rise, (sol.log[j].objective - sol.log[j - 1].objective)
                                          / sol.log[j - 1].objective);
            rep.add(bound_check("objective_monotone." + name, rise, 1e-14));
            rep.add(measured("iterations." + name, static_cast<double>(sol.log.size() - 1)));
        } catch (const ConvergenceError& e) {
            rep.add({"area_residual." + name, e.best_iterate().max_relative_residual, 0, 0,
                     c.tolerance(1e-6), "fail", "no convergence"});
        }
    }
    return rep;
}

//! \throws InputError for an unknown suite name
inline Report run_suite(const std::string& name, const SuiteConfig& c) {
    if (name == "identities")
        return identities_suite(c);
    if (name == "inequalities")
        return inequalities_suite(c);
    if (name == "endomorphisms")
        return endomorphisms_suite(c);
    if (name == "roundtrip")
        return roundtrip_suite(c);
    throw InputError("unknown suite '" + name + "'");
}

} // namespace bmh
