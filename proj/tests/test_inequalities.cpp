// SPDX-License-Identifier: Apache-2.0
#include <bmh/inequalities.hpp>
#include <bmh/random.hpp>

#include <gtest/gtest.h>

using namespace bmh;

namespace {

bool all_pass(const std::vector<CheckResult>& cs) {
    for (const auto& c : cs)
        if (c.failed())
            return false;
    return !cs.empty();
}

} // namespace

TEST(Report, SlackConventions) {
    auto c = inequality_check("x", 2.0, 1.0, 1e-8);
    EXPECT_DOUBLE_EQ(c.slack, 0.5);
    EXPECT_EQ(c.status, "pass");
    EXPECT_TRUE(inequality_check("x", 1.0, 1.0 + 1e-6, 1e-8).failed());
    EXPECT_FALSE(identity_check("x", 1.0, 1.0 + 1e-10, 1e-9).failed());
    EXPECT_EQ(measured("x", 3.0).status, "report");
    Report r;
    r.add(c);
    r.add(bound_check("b", 2.0, 1.0));
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failures(), 1);
}

TEST(Chain, BallIsEqualityCase) {
    BMHomomorphism phi(projection_kernel());
    auto ball = SpectralBody::from_ellipsoid(Ellipsoid(Vec3(1, 1, 1)));
    auto rows = quermass_chain(phi, ball, true);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.flag, "equality(ball)");
        EXPECT_LE(std::abs(r.slack), 1e-6);
        EXPECT_EQ(r.status, "pass");
    }
    // W_2(B)^2 = kappa_3^2
    EXPECT_NEAR(rows[0].lhs, kappa(3) * kappa(3), 1e-10);
}

TEST(Chain, EllipsoidsSatisfyBothInequalities) {
    Rng rng(4);
    for (const auto& g : {projection_kernel(), mean_section_kernel()}) {
        BMHomomorphism phi(g);
        for (int i = 0; i < 4; ++i) {
            auto k = SpectralBody::from_ellipsoid(random_ellipsoid(rng));
            auto rows = quermass_chain(phi, k);
            EXPECT_TRUE(all_pass(rows)) << g.label();
            for (const auto& r : rows)
                EXPECT_GE(r.slack, -1e-8);
        }
    }
}

TEST(Chain, StrictForElongatedEllipsoid) {
    BMHomomorphism phi(projection_kernel());
    auto k = SpectralBody::from_ellipsoid(Ellipsoid(Vec3(1, 1, 2)));
    for (const auto& r : quermass_chain(phi, k))
        EXPECT_GT(r.slack, 1e-4);
}

TEST(ZonotopeVolume, MatchesHullVolume) {
    Rng rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vec3> gens;
        for (int i = 0; i < 3 + trial; ++i)
            gens.push_back(rng.direction() * rng.uniform(0.2, 1.5));
        EXPECT_NEAR(zonotope_volume(gens), make_zonotope(gens).volume(), 1e-10);
    }
    std::vector<Vec3> box{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    EXPECT_NEAR(zonotope_volume(box), 48.0, 1e-12);
}

TEST(UpperBound, CubeUnderProjection) {
    BMHomomorphism phi(projection_kernel());
    auto rows = volume_upper_bound(phi, make_cube());
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].lhs, 512.0, 1e-9);
    // right side from V([-4, 4]^3) = 512, the hull volume of the realization
    double hull = phi.realize(make_cube()).body.volume();
    EXPECT_NEAR(hull, 512.0, 1e-9);
    EXPECT_NEAR(rows[0].rhs, kappa(3) * kappa(3) / (pi * pi * pi) * hull, 1e-9);
    EXPECT_EQ(rows[0].status, "pass");
    EXPECT_TRUE(volume_upper_bound(BMHomomorphism(cap_kernel(0.5)), make_cube()).empty());
}

TEST(ZonotopeVolume, SurfaceMeasureFromGenerators) {
    Rng rng(7);
    std::vector<Vec3> gens;
    for (int i = 0; i < 6; ++i)
        gens.push_back(rng.direction() * rng.uniform(0.2, 1.5));
    auto z = make_zonotope(gens);
    auto direct = zonotope_surface_measure(gens);
    auto hull = surface_measure(z);
    ASSERT_EQ(direct.size(), hull.size());
    for (const auto& a : hull.atoms()) {
        double w = 0;
        for (const auto& b : direct.atoms())
            if ((a.normal - b.normal).norm() < 1e-8)
                w = b.weight;
        EXPECT_NEAR(w, a.weight, 1e-10);
    }
}

TEST(UpperBound, RandomPolytopes) {
    BMHomomorphism phi(projection_kernel());
    Rng rng(11);
    for (int i = 0; i < 5; ++i)
        EXPECT_TRUE(all_pass(volume_upper_bound(phi, random_polytope(rng))));
}

TEST(Psi, CubeIsAFixedPointShape) {
    BMHomomorphism phi(projection_kernel());
    auto rows = psi0_check(phi, make_cube());
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].lhs, 8.0, 1e-10);
    EXPECT_NEAR(rows[0].rhs, 8.0, 1e-10);
}

TEST(Psi, RandomPolytopesAndEllipsoids) {
    BMHomomorphism phi(projection_kernel());
    Rng rng(12);
    for (int i = 0; i < 3; ++i)
        EXPECT_TRUE(all_pass(psi0_check(phi, random_polytope_with_facets(rng, 4, 12))));
    for (int i = 0; i < 3; ++i) {
        auto rows = psi1_check(phi, SpectralBody::from_ellipsoid(random_ellipsoid(rng)));
        ASSERT_EQ(rows.size(), 2u);
        EXPECT_EQ(rows[0].status, "pass");
        EXPECT_EQ(rows[1].status, "report");
    }
    auto ball = psi1_check(phi, SpectralBody::from_ellipsoid(Ellipsoid(Vec3(1, 1, 1))));
    EXPECT_LE(ball[1].lhs, 1e-6);
}

TEST(Psi, HomothetyDefect) {
    HarmonicExpansion h(4);
    h(0, 0) = 2;
    h(2, 1) = 0.3;
    h(4, -2) = -0.1;
    HarmonicExpansion l = 1.7 * h;
    l(1, 0) = 5;   // a translation does not count
    EXPECT_LE(homothety_defect(h, l), 1e-14);
    l(3, 3) = 0.2;
    EXPECT_GT(homothety_defect(h, l), 0.01);
}

TEST(MixedSymmetry, PolytopesAndSpectral) {
    Rng rng(13);
    for (const auto& g : {projection_kernel(), mean_section_kernel(), cap_kernel(0.5)}) {
        BMHomomorphism phi(g);
        for (int i = 0; i < 5; ++i) {
            auto k = surface_measure(random_polytope(rng));
            auto l = surface_measure(random_polytope(rng));
            EXPECT_FALSE(mixed_symmetry_i0(phi, k, l).failed());
        }
        auto a = SpectralBody::from_ellipsoid(random_ellipsoid(rng));
        auto b = SpectralBody::from_ellipsoid(random_ellipsoid(rng));
        EXPECT_FALSE(mixed_symmetry_i1(phi, a, b).failed());
    }
}

TEST(Shephard, ImplicationOnZonotopes) {
    BMHomomorphism phi(projection_kernel());
    Rng rng(14);
    auto dirs = fibonacci_directions(500);
    for (int i = 0; i < 4; ++i) {
        auto rows = shephard_check(phi, random_polytope(rng), random_polytope(rng), dirs);
        EXPECT_TRUE(all_pass(rows));
    }
}
