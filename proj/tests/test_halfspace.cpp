// SPDX-License-Identifier: Apache-2.0
#include <bmh/halfspace.hpp>
#include <bmh/measure.hpp>
#include <bmh/random.hpp>

#include <gtest/gtest.h>

using namespace bmh;

namespace {

SupportSampleBody fibonacci_samples(int n, const std::function<double(const Vec3&)>& h) {
    SupportSampleBody s;
    s.directions = fibonacci_directions(n);
    s.weights.assign(n, 1.0 / n);
    for (const auto& u : s.directions)
        s.values.push_back(h(u));
    return s;
}

} // namespace

TEST(HalfspaceCell, CubeFromFacetNormals) {
    std::vector<Vec3> n{Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(),
                        -Vec3::UnitY(), Vec3::UnitZ(), -Vec3::UnitZ()};
    std::vector<double> h{1, 1, 1, 1, 1, 1};
    auto cell = intersect_halfspaces(n, h);
    EXPECT_NEAR(cell.volume, 8.0, 1e-13);
    for (double a : cell.areas)
        EXPECT_NEAR(a, 4.0, 1e-13);
    // each of the 12 cube edges has length 2
    int edges = 0;
    for (const auto& [key, len] : cell.edge_lengths)
        if (len > 1e-12) {
            ++edges;
            EXPECT_NEAR(len, 2.0, 1e-13);
        }
    EXPECT_EQ(edges, 12);
}

TEST(HalfspaceCell, RedundantHalfspaceHasZeroArea) {
    std::vector<Vec3> n{Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(),
                        -Vec3::UnitY(), Vec3::UnitZ(), -Vec3::UnitZ(),
                        Vec3(1, 1, 1).normalized()};
    std::vector<double> h{1, 1, 1, 1, 1, 1, 5};
    auto cell = intersect_halfspaces(n, h, Vec3(0.1, 0.2, -0.3));
    EXPECT_NEAR(cell.volume, 8.0, 1e-13);
    EXPECT_EQ(cell.areas[6], 0.0);
    EXPECT_NEAR(cell.support[6], std::sqrt(3.0), 1e-14);
}

TEST(HalfspaceCell, UnboundedAndInfeasible) {
    std::vector<Vec3> n{Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(),
                        -Vec3::UnitY(), Vec3::UnitZ()};
    std::vector<double> h{1, 1, 1, 1, 1};
    EXPECT_THROW(intersect_halfspaces(n, h), NumericError);
    std::vector<Vec3> n6{Vec3::UnitX(), -Vec3::UnitX(), Vec3::UnitY(),
                         -Vec3::UnitY(), Vec3::UnitZ(), -Vec3::UnitZ()};
    std::vector<double> bad{1, 1, 1, 1, 1, -0.5};
    EXPECT_THROW(intersect_halfspaces(n6, bad), NumericError);
}

TEST(HalfspaceCell, MatchesPolytopeFacets) {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = random_polytope(rng);
        std::vector<Vec3> n;
        std::vector<double> h;
        for (const auto& f : p.facets()) {
            n.push_back(f.normal);
            h.push_back(f.offset);
        }
        auto cell = intersect_halfspaces(n, h, p.centroid_of_vertices());
        EXPECT_NEAR(cell.volume, p.volume(), 1e-11 * p.volume());
        for (size_t j = 0; j < n.size(); ++j)
            EXPECT_NEAR(cell.areas[j], p.facets()[j].area, 1e-10 * p.surface_area());
    }
}

SupportSampleBody lebedev_samples(const std::function<double(const Vec3&)>& h) {
    SupportSampleBody s;
    std::tie(s.directions, s.weights) = lebedev_302();
    for (const auto& u : s.directions)
        s.values.push_back(h(u));
    return s;
}

TEST(BodyFromSamples, CubeOn302Directions) {
    auto cube = make_cube().translated(Vec3(0.2, 0.1, -0.3));
    auto s = lebedev_samples([&](const Vec3& u) { return cube.support(u); });
    auto r = body_from_support_samples(s);
    EXPECT_NEAR(r.body.volume(), 8.0, 0.08);
    EXPECT_LE(r.mismatch, 1e-12);
}

TEST(BodyFromSamples, ConstantSamplesApproximateBall) {
    for (auto s : {lebedev_samples([](const Vec3&) { return 1.0; }),
                   fibonacci_samples(302, [](const Vec3&) { return 1.0; })}) {
        auto r = body_from_support_samples(s);
        EXPECT_NEAR(r.body.volume(), kappa(3), 0.02 * kappa(3));
        EXPECT_LE(r.mismatch, 1e-12);
    }
}

TEST(BodyFromSamples, NonSublinearSamplesReportMismatch) {
    // h = 1 + 0.8 cos(3 theta)-type wobble is not a support function:
    // some halfspaces end up strictly inside the others.
    auto s = fibonacci_samples(302, [](const Vec3& u) {
        return 1.0 + 0.6 * (u.z() * u.z() > 0.5 ? 1.0 : 0.0);
    });
    auto r = body_from_support_samples(s);
    EXPECT_GT(r.mismatch, 1e-3);
}
