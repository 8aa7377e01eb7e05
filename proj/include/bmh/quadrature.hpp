// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/quadrature.hpp
//! Quadrature on [-1,1] and on S^2. All sphere rules are normalized to the
//! rotation-invariant probability measure.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"
#include "polytope.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <vector>

namespace bmh {

struct GaussRule {
    std::vector<double> nodes;   //!< ascending, in (-1, 1)
    std::vector<double> weights; //!< sum to 2
};

//! n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline GaussRule gauss_legendre(int n) {
    if (n < 1)
        throw InputError("Gauss-Legendre order must be positive");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1)
                p1 = x, p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1)
                p0 = 1.0, p1 = x;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[i] = rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

//! Cached Gauss-Legendre rule; node generation is O(n^2) per call otherwise.
inline const GaussRule& cached_gauss_legendre(int n) {
    thread_local std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, gauss_legendre(n)).first;
    return it->second;
}

//! Composite Gauss rule for \f$\int_a^b f\f$ with panels split at \c cuts.
struct PanelRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    PanelRule() = default;

    PanelRule(double a, double b, std::vector<double> cuts, int order) {
        const GaussRule& g = cached_gauss_legendre(order);
        cuts.push_back(a);
        cuts.push_back(b);
        std::sort(cuts.begin(), cuts.end());
        for (size_t p = 0; p + 1 < cuts.size(); ++p) {
            double lo = std::max(a, cuts[p]), hi = std::min(b, cuts[p + 1]);
            if (!(hi - lo > 1e-15 * (b - a)))
                continue;
            double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            for (int i = 0; i < order; ++i) {
                nodes.push_back(mid + half * g.nodes[i]);
                weights.push_back(half * g.weights[i]);
            }
        }
    }

    template<class F>
    double integrate(F&& f) const {
        double s = 0;
        for (size_t i = 0; i < nodes.size(); ++i)
            s += weights[i] * f(nodes[i]);
        return s;
    }
};

//---------------------------------------------------------------------------//
//! Product Gauss-Legendre (in cos theta) x uniform azimuth grid on S^2.
//! Weights sum to one. Exact for spherical polynomials of degree below
//! min(2 * n_theta, n_phi).
class SphereGrid {
  public:
    static constexpr int default_theta = 64;
    static constexpr int default_phi = 128;

    explicit SphereGrid(int n_theta = default_theta, int n_phi = default_phi)
        : n_theta_(n_theta), n_phi_(n_phi) {
        if (n_theta < 1 || n_phi < 1)
            throw InputError("sphere grid orders must be positive");
        const GaussRule g = gauss_legendre(n_theta);
        directions_.reserve(static_cast<size_t>(n_theta) * n_phi);
        for (int j = 0; j < n_theta; ++j) {
            double t = g.nodes[j];
            double s = std::sqrt(std::max(0.0, 1.0 - t * t));
            for (int l = 0; l < n_phi; ++l) {
                double phi = 2.0 * pi * l / n_phi;
                directions_.emplace_back(s * std::cos(phi), s * std::sin(phi), t);
                weights_.push_back(0.5 * g.weights[j] / n_phi);
            }
        }
    }

    int n_theta() const { return n_theta_; }
    int n_phi() const { return n_phi_; }
    size_t size() const { return directions_.size(); }
    const std::vector<Vec3>& directions() const { return directions_; }
    const std::vector<double>& weights() const { return weights_; }

    //! Mean of f over the sphere.
    template<class F>
    double mean(F&& f) const {
        double s = 0;
        for (size_t i = 0; i < directions_.size(); ++i)
            s += weights_[i] * f(directions_[i]);
        return s;
    }

    //! Mean of tabulated values (one per grid direction).
    double mean_of(std::span<const double> values) const {
        if (values.size() != directions_.size())
            throw InputError("sample count does not match the grid");
        double s = 0;
        for (size_t i = 0; i < values.size(); ++i)
            s += weights_[i] * values[i];
        return s;
    }

  private:
    int n_theta_;
    int n_phi_;
    std::vector<Vec3> directions_;
    std::vector<double> weights_;
};

//---------------------------------------------------------------------------//
//! Product rule in a frame whose pole is a chosen unit vector: composite
//! Gauss-Legendre in the polar angle theta (panels split where the zonal
//! factor is not smooth) times a uniform azimuth rule. Integrates
//! \f$ \Lambda g(w\cdot a) F(w) \f$ to high accuracy when \f$\Lambda g\f$
//! is piecewise smooth in theta and F is smooth.
class ZonalFrameRule {
  public:
    //! \param t_breaks values of w.a where the zonal factor has kinks
    ZonalFrameRule(std::span<const double> t_breaks, int order_per_panel,
                   int n_phi)
        : n_phi_(n_phi) {
        std::vector<double> cuts;
        for (double t : t_breaks)
            if (t > -1.0 && t < 1.0)
                cuts.push_back(std::acos(t));
        PanelRule rule(0.0, pi, cuts, order_per_panel);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            double th = rule.nodes[i];
            cos_.push_back(std::cos(th));
            sin_.push_back(std::sin(th));
            // dt = sin(theta) dtheta; probability normalization 1/2 in t
            weight_.push_back(0.5 * rule.weights[i] * std::sin(th));
        }
        for (int l = 0; l < n_phi; ++l) {
            double phi = 2.0 * pi * (l + 0.5) / n_phi;
            cos_phi_.push_back(std::cos(phi));
            sin_phi_.push_back(std::sin(phi));
        }
    }

    size_t polar_size() const { return cos_.size(); }
    int n_phi() const { return n_phi_; }

    //! \f$\int_{S^2} G(w\cdot a) F(w) dw\f$ with G evaluated once per ring.
    template<class G, class F>
    double integrate(const Vec3& pole, G&& zonal, F&& f) const {
        auto [e1, e2] = orthonormal_complement(pole);
        double total = 0;
        for (size_t i = 0; i < cos_.size(); ++i) {
            double g = zonal(cos_[i]);
            if (g == 0.0)
                continue;
            double ring = 0;
            for (int l = 0; l < n_phi_; ++l) {
                Vec3 w = cos_[i] * pole
                         + sin_[i] * (cos_phi_[l] * e1 + sin_phi_[l] * e2);
                ring += f(w);
            }
            total += weight_[i] * g * ring / n_phi_;
        }
        return total;
    }

    //! Same as integrate() for a vector-valued F returning Eigen vectors.
    template<class G, class F>
    Eigen::VectorXd integrate_vector(const Vec3& pole, G&& zonal, F&& f,
                                     int dim) const {
        auto [e1, e2] = orthonormal_complement(pole);
        Eigen::VectorXd total = Eigen::VectorXd::Zero(dim);
        Eigen::VectorXd ring(dim);
        for (size_t i = 0; i < cos_.size(); ++i) {
            double g = zonal(cos_[i]);
            if (g == 0.0)
                continue;
            ring.setZero();
            for (int l = 0; l < n_phi_; ++l) {
                Vec3 w = cos_[i] * pole
                         + sin_[i] * (cos_phi_[l] * e1 + sin_phi_[l] * e2);
                ring += f(w);
            }
            total += (weight_[i] * g / n_phi_) * ring;
        }
        return total;
    }

  private:
    int n_phi_;
    std::vector<double> cos_, sin_, weight_;
    std::vector<double> cos_phi_, sin_phi_;
};

//! Golden-angle spiral of n nearly uniform unit vectors.
inline std::vector<Vec3> fibonacci_directions(int n) {
    if (n < 1)
        throw InputError("direction count must be positive");
    std::vector<Vec3> dirs;
    dirs.reserve(n);
    const double golden = pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * i;
        dirs.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return dirs;
}

//! Lebedev rule of order 29 with 302 nodes (octahedral orbits). Weights
//! are probability-normalized; contains the six coordinate axes.
inline std::pair<std::vector<Vec3>, std::vector<double>> lebedev_302() {
    std::vector<Vec3> pts;
    std::vector<double> w;
    auto signs = [&](const Vec3& p, double weight) {
        for (int s = 0; s < 8; ++s) {
            Vec3 q(s & 1 ? -p.x() : p.x(), s & 2 ? -p.y() : p.y(),
                   s & 4 ? -p.z() : p.z());
            bool dup = false;
            for (const auto& r : pts)
                dup |= (r - q).squaredNorm() < 1e-28;
            if (!dup) {
                pts.push_back(q);
                w.push_back(weight);
            }
        }
    };
    auto perms = [&](double a, double b, double c, double weight) {
        const double v[3] = {a, b, c};
        static constexpr int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : idx)
            signs(Vec3(v[p[0]], v[p[1]], v[p[2]]), weight);
    };
    perms(1, 0, 0, 0.8545911725128148e-3);
    const double r3 = 1.0 / std::sqrt(3.0);
    perms(r3, r3, r3, 0.3599119285025571e-2);
    const double bk[6][2] = {{0.3515640345570105, 0.3449788424305883e-2},
                             {0.6566329410219612, 0.3604822601419882e-2},
                             {0.4729054132581005, 0.3576729661743367e-2},
                             {0.9618308522614784e-1, 0.2352101413689164e-2},
                             {0.2219645236294178, 0.3108953122413675e-2},
                             {0.7011766416089545, 0.3650045807677255e-2}};
    for (const auto& [a, v] : bk)
        perms(a, a, std::sqrt(1 - 2 * a * a), v);
    const double ck[2][2] = {{0.2644152887060663, 0.2982344963171804e-2},
                             {0.5718955891878961, 0.3600820932216460e-2}};
    for (const auto& [a, v] : ck)
        perms(a, std::sqrt(1 - a * a), 0, v);
    const double dk[2][3] = {
        {0.2510034751770465, 0.8000727494073952, 0.3571540554273387e-2},
        {0.1233548532583327, 0.4127724083168531, 0.3392312205006170e-2}};
    for (const auto& [a, b, v] : dk)
        perms(a, b, std::sqrt(1 - a * a - b * b), v);
    return {pts, w};
}

//---------------------------------------------------------------------------//
// Quadrature routes for support-function functionals
//---------------------------------------------------------------------------//

//! Mean of h(K, .) over the sphere.
template<SupportFunction Body>
double spherical_mean(const Body& body, const SphereGrid& grid = SphereGrid()) {
    return grid.mean([&](const Vec3& u) { return body.support(u); });
}

//! Steiner point 3 * mean(h(K,u) u) on the grid.
template<SupportFunction Body>
Vec3 steiner_point_quadrature(const Body& body,
                              const SphereGrid& grid = SphereGrid()) {
    Vec3 s = Vec3::Zero();
    const auto& dirs = grid.directions();
    const auto& w = grid.weights();
    for (size_t i = 0; i < dirs.size(); ++i)
        s += w[i] * body.support(dirs[i]) * dirs[i];
    return 3.0 * s;
}

} // namespace bmh
