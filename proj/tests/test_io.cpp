// SPDX-License-Identifier: Apache-2.0
#include <bmh/homomorphism.hpp>
#include <bmh/io.hpp>

#include <gtest/gtest.h>

using namespace bmh;

TEST(ParseKernel, BuiltinsAndTables) {
    EXPECT_EQ(parse_kernel(json::parse(R"({"builtin":"projection"})")).label(), "projection");
    auto cap = parse_kernel(json::parse(R"({"builtin":"cap","alpha":0.5})"));
    EXPECT_NEAR(cap(1.0), cap_kernel(0.5)(1.0), 1e-15);
    EXPECT_THROW(parse_kernel(json::parse(R"({"builtin":"cap"})")), ParseError);
    EXPECT_THROW(parse_kernel(json::parse(R"({"builtin":"nope"})")), ParseError);
    auto tab = parse_kernel(json::parse(R"({"table":{"t":[-1,-0.5,0,0.5,1],"value":[1,0.5,0,0.5,1]}})"));
    EXPECT_NEAR(tab(0.5), 0.5, 1e-15);
    EXPECT_NEAR(tab(-1), 1.0, 1e-15);
    // too short, missing endpoint, not increasing
    EXPECT_THROW(parse_kernel(json::parse(R"({"table":{"t":[-1,0,1],"value":[1,0,1]}})")), ParseError);
    EXPECT_THROW(parse_kernel(json::parse(R"({"table":{"t":[-0.9,0,0.5,1],"value":[1,0,1,1]}})")),
                 ParseError);
    EXPECT_THROW(parse_kernel(json::parse(R"({"table":{"t":[-1,0.5,0,1],"value":[1,0,1,1]}})")),
                 ParseError);
    EXPECT_THROW(parse_kernel(json::parse(R"({"table":{"t":[-1,0,0.5,1],"value":[1,0,1]}})")),
                 ParseError);
}

TEST(ParseBody, AllTypes) {
    auto cube = parse_body(json::parse(
        R"({"type":"polytope","vertices":[[-1,-1,-1],[1,-1,-1],[-1,1,-1],[1,1,-1],
            [-1,-1,1],[1,-1,1],[-1,1,1],[1,1,1]]})"));
    ASSERT_TRUE(std::holds_alternative<Polytope3>(cube));
    EXPECT_NEAR(std::get<Polytope3>(cube).volume(), 8.0, 1e-12);

    auto ball = parse_body(json::parse(R"({"type":"ball","center":[1,0,0],"radius":2})"));
    EXPECT_NEAR(support(ball, Vec3::UnitX()), 3.0, 1e-15);

    auto ell = parse_body(json::parse(
        R"({"type":"ellipsoid","semiaxes":[1,2,3],"rotation":[[0,-1,0],[1,0,0],[0,0,1]]})"));
    EXPECT_NEAR(support(ell, Vec3::UnitX()), 2.0, 1e-14);

    auto zon = parse_body(json::parse(
        R"({"type":"zonal_support","profile":{"builtin":"segment_support"}})"));
    EXPECT_NEAR(support(zon, Vec3(0, 0.6, -0.8)), 0.8, 1e-15);
}

TEST(ParseBody, Errors) {
    EXPECT_THROW(parse_body(json::parse(R"({"type":"polytope","vertices":[[0,0,0],[1,0,0],[0,1,0]]})")),
                 ParseError);
    EXPECT_THROW(parse_body(json::parse(R"({"type":"ball","radius":-1})")), ParseError);
    EXPECT_THROW(parse_body(json::parse(R"({"type":"ball"})")), ParseError);
    EXPECT_THROW(parse_body(json::parse(R"({"type":"torus"})")), ParseError);
    EXPECT_THROW(parse_body(json::parse(R"({"type":"ellipsoid","semiaxes":[1,2]})")), ParseError);
    EXPECT_THROW(parse_body(json::parse(R"({"type":"ellipsoid","semiaxes":[1,"x",2]})")), ParseError);
    EXPECT_THROW(parse_body(json::parse(
                     R"({"type":"ellipsoid","semiaxes":[1,1,1],"rotation":[[2,0,0],[0,1,0],[0,0,1]]})")),
                 ParseError);
    // g2 is weakly positive but not a support function
    EXPECT_THROW(parse_body(json::parse(
                     R"({"type":"zonal_support","profile":{"builtin":"mean_section_g2"}})")),
                 ParseError);
    EXPECT_THROW(parse_json_text("{not json"), ParseError);
    EXPECT_THROW(read_json_file("/nonexistent/file.json"), ParseError);
    // four coplanar points parse, then fail as a degenerate body
    auto flat = parse_body(json::parse(
        R"({"type":"polytope","vertices":[[0,0,0],[1,0,0],[0,1,0],[1,1,0]]})"));
    EXPECT_THROW(spectral_body(flat), DimensionError);
}

TEST(ParseMeasure, CubeAndErrors) {
    auto mu = parse_measure(json::parse(
        R"({"atoms":[{"normal":[1,0,0],"weight":4},{"normal":[-2,0,0],"weight":4},
                     {"normal":[0,1,0],"weight":4},{"normal":[0,-1,0],"weight":4},
                     {"normal":[0,0,1],"weight":4},{"normal":[0,0,-1],"weight":4}]})"));
    EXPECT_EQ(mu.size(), 6u);
    EXPECT_NEAR(mu.total_mass(), 24.0, 1e-15);
    EXPECT_THROW(parse_measure(json::parse(R"({"atoms":[{"normal":[0,0,0],"weight":1}]})")), ParseError);
    EXPECT_THROW(parse_measure(json::parse(R"({"atoms":[{"normal":[0,0,1],"weight":-1}]})")), ParseError);
    EXPECT_THROW(parse_measure(json::parse(R"({"weights":[]})")), ParseError);
}

TEST(Output, RoundTripsAndDeterminism) {
    auto cube = make_cube();
    json j = to_json(cube);
    auto back = parse_body(j);
    EXPECT_NEAR(std::get<Polytope3>(back).volume(), 8.0, 1e-12);
    EXPECT_EQ(j.dump(), to_json(make_cube()).dump());

    auto mu = surface_measure(cube);
    auto again = parse_measure(to_json(mu));
    EXPECT_EQ(to_json(again).dump(), to_json(mu).dump());

    Report r;
    r.suite = "x";
    r.environment["seed"] = "0";
    r.add(inequality_check("a", 1.0, 0.5, 1e-8));
    r.checks.back().flag = "equality(ball)";
    json rj = to_json(r);
    EXPECT_EQ(rj["checks"][0]["flag"], "equality(ball)");
    EXPECT_TRUE(rj["passed"].get<bool>());
    EXPECT_EQ(rj.dump(), to_json(r).dump());
}

TEST(SmoothBodies, SpectralForms) {
    // ball: curvature density 4 pi r^2, image under any kernel is r_Phi r^2
    auto ball = spectral_body(BallBody(Vec3(0.5, 0, 0), 2.0));
    EXPECT_NEAR(ball.area_density()(0, 0), 4 * pi * 4, 1e-9);
    BMHomomorphism phi(cap_kernel(0.5));
    EXPECT_NEAR(phi.apply_spectral(ball, 0).support(Vec3::UnitY()), 4 * phi.radius(), 1e-9);
    // a zonal support body that is a ball: f = 1
    ZonalSupportBody unit(constant_kernel(1.0));
    auto s = spectral_body(unit);
    EXPECT_NEAR(s.area_density()(0, 0), 4 * pi, 1e-6);
    // a spheroid through its zonal support function sqrt(1 + 3 t^2)
    ZonalSupportBody spheroid(ZonalProfile([](double t) { return std::sqrt(1 + 3 * t * t); }, "sph"));
    Ellipsoid e(Vec3(1, 1, 2));
    for (const auto& u : fibonacci_directions(50)) {
        EXPECT_NEAR(spheroid.support(u), e.support(u), 1e-14);
        EXPECT_NEAR(spheroid.radii_product(u), e.radii_product(u), 1e-6);
    }
}
