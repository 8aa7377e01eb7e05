// SPDX-License-Identifier: Apache-2.0
#include <bmh/minkowski.hpp>
#include <bmh/random.hpp>

#include <gtest/gtest.h>

using namespace bmh;

namespace {

// Hausdorff distance of two polytopes through their support functions on
// many directions; both are compared after Steiner alignment.
double support_distance(const Polytope3& a, const Polytope3& b) {
    double d = 0;
    for (const auto& u : fibonacci_directions(2000))
        d = std::max(d, std::abs(a.support(u) - b.support(u)));
    return d;
}

Polytope3 aligned(const Polytope3& p) { return p.translated(-steiner_point(p)); }

} // namespace

TEST(Minkowski, CubeRoundTrip) {
    auto cube = make_cube();
    auto sol = solve_minkowski(surface_measure(cube));
    EXPECT_LE(sol.max_relative_residual, 1e-10);
    for (double h : sol.support)
        EXPECT_NEAR(h, 1.0, 1e-8);
    EXPECT_NEAR(sol.body.volume(), 8.0, 1e-8);
}

TEST(Minkowski, SimplexRoundTrip) {
    auto t = make_regular_tetrahedron().translated(Vec3(0.3, -2, 1));
    auto sol = solve_minkowski(surface_measure(t));
    EXPECT_LE(support_distance(sol.body, aligned(t)), 1e-6);
}

TEST(Minkowski, RandomRoundTrips) {
    Rng rng(21);
    for (int i = 0; i < 5; ++i) {
        auto p = random_polytope_with_facets(rng, 4, 20);
        auto mu = surface_measure(p);
        auto sol = solve_minkowski(mu);
        EXPECT_LE(sol.max_relative_residual, 1e-6);
        auto ref = aligned(p);
        for (size_t j = 0; j < mu.size(); ++j)
            EXPECT_NEAR(sol.support[j], ref.support(mu.atoms()[j].normal), 1e-5);
    }
}

TEST(Minkowski, InstanceErrors) {
    // all normals on the equator
    std::vector<Atom> flat;
    for (int i = 0; i < 6; ++i) {
        double a = 2 * pi * i / 6;
        flat.push_back({Vec3(std::cos(a), std::sin(a), 0), 1.0});
    }
    try {
        solve_minkowski(DiscreteSurfaceMeasure(flat));
        FAIL();
    } catch (const InstanceError& e) {
        EXPECT_NE(std::string(e.what()).find("great-circle"), std::string::npos);
    }
    auto lopsided = surface_measure(make_cube()).atoms();
    lopsided[0].weight *= 2;
    try {
        solve_minkowski(DiscreteSurfaceMeasure(lopsided));
        FAIL();
    } catch (const InstanceError& e) {
        EXPECT_NE(std::string(e.what()).find("moment"), std::string::npos);
    }
    std::vector<Atom> three{{Vec3::UnitX(), 1}, {Vec3::UnitY(), 1}, {Vec3::UnitZ(), 1}};
    EXPECT_THROW(solve_minkowski(DiscreteSurfaceMeasure(three)), InstanceError);
}

TEST(Minkowski, ScalingAndRotationEquivariance) {
    Rng rng(5);
    auto p = random_polytope(rng);
    auto mu = surface_measure(p);
    auto base = solve_minkowski(mu).body;
    double lambda = 1.7;
    auto scaled = solve_minkowski(mu.scaled(lambda * lambda)).body;
    EXPECT_LE(support_distance(scaled, base.scaled(lambda)), 1e-6);
    Mat3 r = rng.rotation();
    auto rotated = solve_minkowski(mu.rotated(r)).body;
    EXPECT_LE(support_distance(rotated, base.rotated(r)), 1e-6);
}

TEST(Minkowski, ObjectiveIsMonotone) {
    Rng rng(8);
    for (int i = 0; i < 3; ++i) {
        auto sol = solve_minkowski(surface_measure(random_polytope(rng)));
        for (size_t j = 1; j < sol.log.size(); ++j)
            EXPECT_LE(sol.log[j].objective, sol.log[j - 1].objective * (1 + 1e-14));
        EXPECT_LT(sol.log.size(), 60u);
    }
}

TEST(Minkowski, BlaschkeBodyOfCube) {
    auto b = blaschke_body(make_cube());
    auto expected = make_cube().scaled(std::sqrt(2.0));
    EXPECT_LE(support_distance(b, expected), 1e-8);
}

TEST(Minkowski, BlaschkeBodyIsSymmetric) {
    Rng rng(2);
    auto b = blaschke_body(random_polytope(rng));
    for (const auto& u : fibonacci_directions(200))
        EXPECT_NEAR(b.support(u), b.support(-u), 1e-6);
}
