// SPDX-License-Identifier: Apache-2.0
#include <bmh/bodies.hpp>
#include <bmh/harmonics.hpp>
#include <bmh/legendre.hpp>
#include <bmh/polytope.hpp>
#include <bmh/random.hpp>

#include <gtest/gtest.h>

using namespace bmh;

TEST(Legendre, ClassicalValues) {
    EXPECT_DOUBLE_EQ(legendre(3, 2, 0.0), -0.5);
    EXPECT_DOUBLE_EQ(legendre(3, 1, 0.3), 0.3);
    for (int n : {3, 4, 7})
        for (int k = 0; k <= 20; ++k)
            EXPECT_NEAR(legendre(n, k, 1.0), 1.0, 1e-13);
    // P_3 = (5t^3 - 3t)/2; n = 4 gives Chebyshev-type U_k(t)/(k+1)
    for (double t : {-0.7, 0.1, 0.55}) {
        EXPECT_NEAR(legendre(3, 3, t), 0.5 * (5 * t * t * t - 3 * t), 1e-15);
        double th = std::acos(t);
        EXPECT_NEAR(legendre(4, 5, t), std::sin(6 * th) / (6 * std::sin(th)), 1e-14);
    }
    EXPECT_THROW(legendre(3, 2, 1.01), InputError);
    EXPECT_THROW(legendre(2, 2, 0.5), DimensionError);
    EXPECT_EQ(harmonic_dimension(3, 4), 9);
    EXPECT_EQ(harmonic_dimension(4, 2), 9);
}

TEST(RealHarmonics, OrthonormalOnDefaultGrid) {
    const int K = 12;
    SphereGrid grid;
    RealHarmonics y(K);
    const int n = y.size();
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> buf(n);
    for (size_t i = 0; i < grid.size(); ++i) {
        y.evaluate(grid.directions()[i], buf.data());
        Eigen::Map<Eigen::VectorXd> v(buf.data(), n);
        gram += grid.weights()[i] * v * v.transpose();
    }
    EXPECT_LE((gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(RealHarmonics, AdditionTheorem) {
    const int K = 12;
    RealHarmonics y(K);
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        Vec3 u = rng.direction(), v = rng.direction();
        auto yu = y(u), yv = y(v);
        auto p = legendre_all(3, K, u.dot(v));
        for (int k = 0; k <= K; ++k) {
            double s = 0;
            for (int m = -k; m <= k; ++m)
                s += yu[harmonic_index(k, m)] * yv[harmonic_index(k, m)];
            EXPECT_NEAR(s, (2 * k + 1) * p[k], 1e-9);
        }
    }
}

TEST(RealHarmonics, PolesAndLowDegrees) {
    RealHarmonics y(2);
    auto north = y(Vec3::UnitZ());
    EXPECT_DOUBLE_EQ(north[0], 1.0);
    EXPECT_NEAR(north[harmonic_index(1, 0)], std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(north[harmonic_index(1, 1)], 0.0, 1e-15);
    Vec3 u = Vec3(0.3, -0.5, 0.8).normalized();
    auto v = y(u);
    const double r3 = std::sqrt(3.0);
    EXPECT_NEAR(v[harmonic_index(1, -1)], r3 * u.y(), 1e-15);
    EXPECT_NEAR(v[harmonic_index(1, 0)], r3 * u.z(), 1e-15);
    EXPECT_NEAR(v[harmonic_index(1, 1)], r3 * u.x(), 1e-15);
}

TEST(Expand, ConstantAndLinear) {
    auto one = expand([](const Vec3&) { return 1.0; }, 6);
    EXPECT_NEAR(one(0, 0), 1.0, 1e-14);
    one(0, 0) = 0;
    EXPECT_LE(one.max_abs(), 1e-14);

    auto z = expand([](const Vec3& u) { return u.z(); }, 6);
    for (int k = 0; k <= 6; ++k) {
        if (k != 1) {
            EXPECT_LE(z.band_norm(k), 1e-14);
        }
    }
    EXPECT_NEAR(z(1, 0), 1.0 / std::sqrt(3.0), 1e-14);
}

TEST(Expand, CubeMeasureHasNoDegreeOneBlock) {
    auto c = expand(surface_measure(make_cube()), 8);
    EXPECT_EQ(c.grid(), "exact");
    EXPECT_LE(c.band_norm(1), 1e-10);
    EXPECT_NEAR(c(0, 0), 24.0, 1e-12);
    Rng rng(8);
    for (int i = 0; i < 5; ++i) {
        auto mu = surface_measure(random_polytope(rng));
        EXPECT_LE(expand(mu, 4).band_norm(1), 1e-10 * mu.total_mass());
    }
}

TEST(Expand, MeasureRouteMatchesBandConvolutionRoute) {
    // pi_k mu(u) = (2k+1) sum_i a_i P_k(u.u_i), sampled on the grid and
    // re-expanded, against the direct atom-sum coefficients
    Rng rng(21);
    auto mu = surface_measure(random_polytope(rng));
    const int K = 8;
    auto direct = expand(mu, K);
    for (int k = 0; k <= K; ++k) {
        auto band = expand(
            [&](const Vec3& u) {
                double s = 0;
                for (const auto& a : mu.atoms())
                    s += a.weight * legendre(3, k, u.dot(a.normal));
                return (2 * k + 1) * s;
            },
            K);
        EXPECT_LE((band - project(direct, k)).max_abs(), 1e-10 * mu.total_mass());
    }
}

TEST(Expand, BandProjectionMatchesConvolution) {
    Ellipsoid e(Vec3(1, 1.5, 0.7), Rng(2).rotation(), Vec3(0.2, 0, -0.1));
    auto h = [&](const Vec3& u) { return e.support(u); };
    const int K = 6;
    auto f = expand(h, K);
    SphereGrid grid;
    Rng rng(3);
    for (int trial = 0; trial < 3; ++trial) {
        Vec3 u = rng.direction();
        for (int k = 0; k <= K; ++k) {
            double conv = (2 * k + 1) * grid.mean([&](const Vec3& v) {
                return h(v) * legendre(3, k, u.dot(v));
            });
            EXPECT_NEAR(f.evaluate_band(k, u), conv, 1e-12);
        }
    }
}

TEST(Expand, ParsevalAndBandlimitedRoundTrip) {
    const int K = 10;
    Rng rng(6);
    HarmonicExpansion f(K);
    for (double& c : f.coefficients())
        c = rng.normal();
    auto values = [&](const Vec3& u) { return f.evaluate(u); };
    auto g = expand(values, K);
    EXPECT_LE((g - f).max_abs(), 1e-12);
    // removing every band leaves the zero function
    auto rest = f;
    for (int k = 0; k <= K; ++k)
        rest -= project(g, k);
    SphereGrid grid(16, 32);
    for (const auto& u : grid.directions())
        EXPECT_NEAR(rest.evaluate(u), 0.0, 1e-10);

    Ellipsoid e(Vec3(1, 2, 0.5));
    auto he = expand([&](const Vec3& u) { return e.support(u); }, 8);
    double energy = SphereGrid().mean([&](const Vec3& u) { return std::pow(e.support(u), 2); });
    double sum = 0;
    for (double c : he.coefficients())
        sum += c * c;
    EXPECT_LE(sum, energy + 1e-12);
}

TEST(Project, Examples) {
    auto one = expand([](const Vec3&) { return 1.0; }, 4);
    EXPECT_LE(project(one, 2).max_abs(), 1e-14);
    Rng rng(1);
    HarmonicExpansion f(5);
    for (double& c : f.coefficients())
        c = rng.normal();
    auto p = project(f, 3);
    EXPECT_EQ((project(p, 3) - p).max_abs(), 0.0);
    EXPECT_THROW(project(f, 6), InputError);

    const Polytope3 c = make_cube();
    auto cube = expand([&](const Vec3& u) { return c.support(u); }, 6);
    EXPECT_LE(project(cube, 1).max_abs(), 1e-13);
}

TEST(ApplyMultiplier, Examples) {
    Rng rng(2);
    HarmonicExpansion f(6);
    for (double& c : f.coefficients())
        c = rng.normal();
    EXPECT_EQ((apply_multiplier(f, MultiplierSequence::constant(6)) - f).max_abs(), 0.0);

    auto dirac = ZonalMeasureAtoms::dirac().legendre_coefficients(3, 6);
    MultiplierSequence d{3, dirac, std::vector<double>(7, 0.0)};
    EXPECT_LE((apply_multiplier(f, d) - f).max_abs(), 1e-15);

    auto kill = MultiplierSequence::constant(6);
    kill.c[1] = 0;
    auto g = apply_multiplier(f, kill);
    EXPECT_EQ(g.band_norm(1), 0.0);
    EXPECT_EQ((project(g, 2) - project(f, 2)).max_abs(), 0.0);

    EXPECT_THROW(apply_multiplier(f, MultiplierSequence::constant(4)), InputError);
}

namespace {

// Laplace-Beltrami by central differences of the 0-homogeneous extension.
template<class F>
double fd_laplace_beltrami(F&& f, const Vec3& u, double step = 1e-3) {
    auto ext = [&](const Vec3& x) { return f(Vec3(x.normalized())); };
    double lap = 0;
    for (int i = 0; i < 3; ++i) {
        Vec3 e = Vec3::Zero();
        e[i] = step;
        lap += ext(u + e) - 2 * ext(u) + ext(u - e);
    }
    return lap / (step * step);
}

} // namespace

TEST(Delta1, EigenvaluesAndFiniteDifferences) {
    auto one = expand([](const Vec3&) { return 1.0; }, 4);
    auto d1 = delta1(one);
    EXPECT_NEAR(d1(0, 0), 2.0, 1e-14);

    Rng rng(5);
    HarmonicExpansion f(4);
    for (double& c : f.coefficients())
        c = rng.normal();
    EXPECT_LE(delta1(project(f, 1)).max_abs(), 0.0);
    EXPECT_LE((delta1(project(f, 2)) - (-4.0) * project(f, 2)).max_abs(), 1e-14);

    // degree-2 harmonic against a finite-difference Laplace-Beltrami
    auto h2 = project(f, 2);
    for (int i = 0; i < 10; ++i) {
        Vec3 u = rng.direction();
        auto fn = [&](const Vec3& v) { return h2.evaluate(v); };
        double fd = fd_laplace_beltrami(fn, u) + 2 * fn(u);
        EXPECT_NEAR(fd, delta1(h2).evaluate(u), 1e-4);
    }
}

TEST(Delta1, FirstAreaDensityOfBallAndEllipsoids) {
    SpectralBody ball = SpectralBody::from_body(BallBody());
    auto s1 = ball.first_area_density();
    EXPECT_NEAR(s1(0, 0), 1.0, 1e-13);
    s1(0, 0) = 0;
    EXPECT_LE(s1.max_abs(), 1e-12);

    // Delta_1 h = sum of principal radii; cross-checked pointwise by finite
    // differences as well
    Rng rng(12);
    for (int trial = 0; trial < 3; ++trial) {
        Ellipsoid e(Vec3(rng.uniform(0.8, 1.6), rng.uniform(0.8, 1.6), rng.uniform(0.8, 1.6)),
                    rng.rotation(), Vec3(0.1, -0.2, 0.3));
        const int K = 12;
        auto lhs = delta1(expand([&](const Vec3& u) { return e.support(u); }, K));
        auto rhs = expand([&](const Vec3& u) { return e.radii_sum(u); }, K);
        EXPECT_LE((lhs - rhs).max_abs(), 1e-10);
        for (int i = 0; i < 5; ++i) {
            Vec3 u = rng.direction();
            auto h = [&](const Vec3& v) { return e.support(v); };
            double fd = fd_laplace_beltrami(h, u) + 2 * h(u);
            EXPECT_NEAR(fd, e.radii_sum(u), 1e-4);
            EXPECT_NEAR(lhs.evaluate(u), e.radii_sum(u), 1e-4);
        }
    }
}

TEST(FunkHecke, BuiltinKernels) {
    for (const auto& g : {projection_kernel(), mean_section_kernel()})
        for (int k = 0; k <= 6; ++k)
            EXPECT_LE(funk_hecke_check(g, k), 1e-8) << g.label() << " k=" << k;
    auto c = legendre_coefficients(projection_kernel(), 3, 1);
    EXPECT_NEAR(c[0], 0.25, 1e-12);
    EXPECT_NEAR(c[1], 0.0, 1e-12);
    EXPECT_LE(funk_hecke_check(cap_kernel(0.5), 3), 1e-8);
}

TEST(SpectralBody, SteinerPointAndQuermassintegrals) {
    Vec3 x0(0.3, -0.7, 1.1);
    Ellipsoid e(Vec3(1, 1.3, 0.8), Rng(1).rotation(), x0);
    auto sb = SpectralBody::from_body(e);
    EXPECT_LE((sb.steiner_point() - x0).norm(), 1e-12);

    auto ball = SpectralBody::from_body(BallBody(Vec3::Zero(), 2.0));
    EXPECT_NEAR(ball.mean_width_quermass(), kappa(3) * 2, 1e-12);
    EXPECT_NEAR(ball.w1(), 4 * pi * 4 / 3, 1e-11);

    // W_1 = surface area / 3 with the area from the curvature density
    Ellipsoid f(Vec3(1, 1.2, 0.9));
    double area = 4 * pi * SphereGrid().mean([&](const Vec3& u) { return f.radii_product(u); });
    EXPECT_NEAR(SpectralBody::from_body(f).w1(), area / 3, 1e-6 * area);
    // translation does not change W_1
    EXPECT_NEAR(SpectralBody::from_body(f.translated(x0)).w1(),
                SpectralBody::from_body(f).w1(), 1e-10);
}
