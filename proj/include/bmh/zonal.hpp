// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/zonal.hpp
//! Zonal kernels described by their profile on [-1,1], their action on
//! discrete measures, Legendre coefficients and positivity screening.
//---------------------------------------------------------------------------//
#pragma once

#include "common.hpp"
#include "legendre.hpp"
#include "measure.hpp"
#include "quadrature.hpp"
#include "random.hpp"

#include <boost/math/interpolators/pchip.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bmh {

enum class Parity { none, even, odd };

//---------------------------------------------------------------------------//
//! Profile t -> Lambda g(t) of a zonal function, with the points of
//! (-1,1) where it fails to be smooth. Arguments are clamped to [-1,1].
class ZonalProfile {
  public:
    using Fn = std::function<double(double)>;

    ZonalProfile(Fn fn, std::string label, Parity parity = Parity::none,
                 std::vector<double> breakpoints = {})
        : fn_(std::move(fn)), label_(std::move(label)), parity_(parity),
          breaks_(std::move(breakpoints)) {
        std::sort(breaks_.begin(), breaks_.end());
    }

    double operator()(double t) const { return fn_(clamp_unit(t)); }

    const std::string& label() const { return label_; }
    Parity parity() const { return parity_; }
    const std::vector<double>& breakpoints() const { return breaks_; }

    //! Breakpoints with the endpoints added; used where the profile is
    //! composed with a non-affine change of variable.
    std::vector<double> breakpoints_with_ends() const {
        std::vector<double> b = breaks_;
        b.insert(b.begin(), -1.0);
        b.push_back(1.0);
        return b;
    }

  private:
    Fn fn_;
    std::string label_;
    Parity parity_;
    std::vector<double> breaks_;
};

//! Lambda g(t) = |t|/2, the projection body kernel.
inline ZonalProfile projection_kernel() {
    return {[](double t) { return 0.5 * std::abs(t); }, "projection", Parity::even, {0.0}};
}

//! Lambda g_2(t) = arccos(-t) sqrt(1 - t^2), the second mean section kernel.
inline ZonalProfile mean_section_kernel() {
    return {[](double t) { return std::acos(-t) * std::sqrt(std::max(0.0, 1.0 - t * t)); },
            "mean_section_g2"};
}

//! Lambda g(t) = |t| = h([-e,e], .).
inline ZonalProfile segment_support_kernel() {
    return {[](double t) { return std::abs(t); }, "segment_support", Parity::even, {0.0}};
}

//! Indicator of the cap {t >= cos alpha}, normalized to spherical mean one.
inline ZonalProfile cap_kernel(double alpha) {
    if (!(alpha > 0) || !(alpha <= pi))
        throw InputError("cap angle must lie in (0, pi]");
    const double c = std::cos(alpha);
    const double height = alpha >= pi ? 1.0 : 2.0 / (1.0 - c);
    std::vector<double> br;
    if (alpha < pi)
        br.push_back(c);
    return {[c, height](double t) { return t >= c ? height : 0.0; },
            "cap(" + std::to_string(alpha) + ")", alpha >= pi ? Parity::even : Parity::none,
            br};
}

inline ZonalProfile constant_kernel(double value) {
    return {[value](double) { return value; }, "constant", Parity::even};
}

//! Lambda g(t) = t; convolution with it extracts the first moment.
inline ZonalProfile linear_kernel() {
    return {[](double t) { return t; }, "linear", Parity::odd};
}

//! Monotone piecewise-cubic interpolation of samples on [-1,1]. The grid must
//! be strictly increasing, start at -1, end at 1, and have >= 4 nodes.
inline ZonalProfile tabulated_kernel(std::vector<double> t, std::vector<double> value,
                                     std::string label = "table") {
    if (t.size() != value.size())
        throw InputError("kernel table columns differ in length");
    if (t.size() < 4)
        throw InputError("kernel table needs at least four samples");
    if (t.front() != -1.0 || t.back() != 1.0)
        throw InputError("kernel table must include both endpoints -1 and 1");
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw InputError("kernel table t-values must be strictly increasing");
    for (double v : value)
        if (!std::isfinite(v))
            throw InputError("kernel table values must be finite");
    std::vector<double> breaks(t.begin() + 1, t.end() - 1);
    using boost::math::interpolators::pchip;
    auto interp = std::make_shared<pchip<std::vector<double>>>(std::move(t), std::move(value));
    return {[interp](double x) { return (*interp)(x); }, std::move(label), Parity::none,
            std::move(breaks)};
}

//! Builtin kernels by name; \c alpha is used by "cap" only.
inline ZonalProfile builtin_kernel(const std::string& name, double alpha = 0.5) {
    if (name == "projection")
        return projection_kernel();
    if (name == "mean_section_g2")
        return mean_section_kernel();
    if (name == "segment_support")
        return segment_support_kernel();
    if (name == "cap")
        return cap_kernel(alpha);
    throw InputError("unknown builtin kernel '" + name + "'");
}

//---------------------------------------------------------------------------//
// Discrete zonal measures
//---------------------------------------------------------------------------//

//! Zonal measure made of uniform circle measures {w : w.e = t_j} with
//! masses m_j; t = 1 is the Dirac measure at the pole.
struct ZonalMeasureAtoms {
    struct Ring {
        double t;
        double mass;
    };
    std::vector<Ring> rings;

    static ZonalMeasureAtoms dirac() { return {{{1.0, 1.0}}}; }

    //! Legendre coefficients sum_j m_j P_k^n(t_j).
    std::vector<double> legendre_coefficients(int n, int max_degree) const {
        std::vector<double> c(max_degree + 1, 0.0);
        for (const auto& r : rings) {
            auto p = legendre_all(n, max_degree, r.t);
            for (int k = 0; k <= max_degree; ++k)
                c[k] += r.mass * p[k];
        }
        return c;
    }
};

namespace detail {

// Azimuthal cuts for phi -> Lambda g(c + r cos phi) on [0, pi]: where the
// argument crosses a breakpoint, plus geometric grading when the argument
// comes close to +-1 without reaching it (profiles such as sqrt(1 - t^2)
// are nearly conical there).
inline void azimuth_cuts(const ZonalProfile& g, double c, double r, std::vector<double>& cuts) {
    cuts.clear();
    for (double b : g.breakpoints_with_ends()) {
        double x = (b - c) / r;
        if (x > -1.0 && x < 1.0)
            cuts.push_back(std::acos(x));
    }
    auto grade = [&](double gap, bool at_zero) {
        if (!(gap > 0) || gap > 0.25 * r)
            return;
        double width = std::sqrt(2.0 * gap / r);
        for (double w = 0.25 * width; w < 0.5 * pi; w *= 2.0)
            cuts.push_back(at_zero ? w : pi - w);
    };
    grade(1.0 - (c + r), true);
    grade((c - r) + 1.0, false);
}

//! Points s in (-1,1) where level circles {t = b_f} around one pole and
//! {t = b_g} around another become tangent, for poles at inner product s.
inline std::vector<double> tangency_breakpoints(const std::vector<double>& bf,
                                                const std::vector<double>& bg) {
    std::vector<double> br;
    for (double x : bf)
        for (double y : bg) {
            double ax = std::acos(clamp_unit(x)), ay = std::acos(clamp_unit(y));
            for (double a : {ax + ay, std::abs(ax - ay)}) {
                double c = std::cos(a);
                if (c > -1 + 1e-12 && c < 1 - 1e-12
                    && std::none_of(br.begin(), br.end(),
                                    [&](double q) { return std::abs(q - c) < 1e-12; }))
                    br.push_back(c);
            }
        }
    return br;
}

} // namespace detail

//! Mean of Lambda g(u.w) over the circle {w : w.a = t} where s = u.a.
//! Exact where Lambda g is smooth; the azimuth is split where u.w crosses a
//! breakpoint.
inline double circle_average(const ZonalProfile& g, double s, double t, int order = 24) {
    s = clamp_unit(s);
    t = clamp_unit(t);
    const double ss = std::sqrt(std::max(0.0, 1.0 - s * s));
    const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double r = ss * st;
    if (r < 1e-300)
        return g(s * t);
    // u.w = s t + r cos(phi), phi in [0, pi] by symmetry
    std::vector<double> cuts;
    detail::azimuth_cuts(g, s * t, r, cuts);
    PanelRule rule(0.0, pi, cuts, order);
    return rule.integrate([&](double phi) { return g(s * t + r * std::cos(phi)); }) / pi;
}

//! Profile of the zonal function (g * nu) for a ring measure nu.
inline ZonalProfile convolve_zonal(const ZonalProfile& g, const ZonalMeasureAtoms& nu) {
    auto fn = [g, nu](double s) {
        double v = 0;
        for (const auto& r : nu.rings)
            v += r.mass * circle_average(g, s, r.t);
        return v;
    };
    std::vector<double> ts;
    for (const auto& r : nu.rings)
        ts.push_back(r.t);
    return {fn, g.label() + "*rings", Parity::none,
            detail::tangency_breakpoints(g.breakpoints_with_ends(), ts)};
}

//---------------------------------------------------------------------------//
// Convolution of discrete measures with zonal profiles
//---------------------------------------------------------------------------//

//! (mu * g)(u) = sum_i a_i Lambda g(u . u_i).
inline double convolve_measure(const DiscreteSurfaceMeasure& mu, const ZonalProfile& g,
                               const Vec3& u) {
    require_unit(u);
    double v = 0;
    for (const auto& a : mu.atoms())
        v += a.weight * g(u.dot(a.normal));
    return v;
}

//---------------------------------------------------------------------------//
// Legendre coefficients
//---------------------------------------------------------------------------//

struct MultiplierSequence {
    int dimension = 3;
    std::vector<double> c;
    std::vector<double> error;   //!< quadrature error estimate per degree

    int max_degree() const { return static_cast<int>(c.size()) - 1; }
    double operator[](int k) const { return c.at(k); }

    static MultiplierSequence constant(int max_degree, double value = 1.0, int n = 3) {
        return {n, std::vector<double>(max_degree + 1, value),
                std::vector<double>(max_degree + 1, 0.0)};
    }
};

namespace detail {

// Smoothstep substitution x -> x^2 (3 - 2x) on each panel: removes square
// root behaviour at panel ends (tangencies of level circles).
inline PanelRule clustered_panels(double a, double b, const std::vector<double>& cuts,
                                  int order) {
    const GaussRule& g = cached_gauss_legendre(order);
    std::vector<double> c = cuts;
    c.push_back(a);
    c.push_back(b);
    std::sort(c.begin(), c.end());
    PanelRule out;
    for (size_t p = 0; p + 1 < c.size(); ++p) {
        double lo = std::max(a, c[p]), hi = std::min(b, c[p + 1]);
        if (!(hi - lo > 1e-14 * (b - a)))
            continue;
        for (int i = 0; i < order; ++i) {
            double x = 0.5 * (g.nodes[i] + 1.0);
            out.nodes.push_back(lo + (hi - lo) * x * x * (3 - 2 * x));
            out.weights.push_back((hi - lo) * 3 * x * (1 - x) * g.weights[i]);
        }
    }
    return out;
}


// (omega_{n-1}/omega_n) int_0^pi Lambda g(cos th) P_k^n(cos th) sin^{n-2} th dth
inline std::vector<double> legendre_quadrature(const ZonalProfile& g, int n, int max_degree,
                                               int order) {
    std::vector<double> cuts;
    for (double b : g.breakpoints())
        if (b > -1.0 && b < 1.0)
            cuts.push_back(std::acos(b));
    PanelRule rule = clustered_panels(0.0, pi, cuts, order);
    const double norm = omega(n - 1) / omega(n);
    LegendreEvaluator p(n, max_degree);
    std::vector<double> c(max_degree + 1, 0.0), pk(max_degree + 1);
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double th = rule.nodes[i];
        double t = std::cos(th);
        double w = rule.weights[i] * std::pow(std::sin(th), n - 2) * g(t);
        p.evaluate(t, pk.data());
        for (int k = 0; k <= max_degree; ++k)
            c[k] += w * pk[k];
    }
    for (double& x : c)
        x *= norm;
    return c;
}

} // namespace detail

//! Multipliers c_k of the kernel in dimension n, k = 0..K, by composite
//! Gauss quadrature in the polar angle. The error estimate compares two
//! orders of the same composite rule.
inline MultiplierSequence legendre_coefficients(const ZonalProfile& g, int n = 3,
                                                int max_degree = 12) {
    if (max_degree < 0)
        throw InputError("maximal degree must be nonnegative");
    if (n < 3)
        throw DimensionError("Legendre coefficients need n >= 3");
    const int order = std::max(64, 4 * max_degree + 32);
    MultiplierSequence m;
    m.dimension = n;
    m.c = detail::legendre_quadrature(g, n, max_degree, order);
    auto coarse = detail::legendre_quadrature(g, n, max_degree, order / 2);
    m.error.resize(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) {
        if (!std::isfinite(m.c[k]))
            throw NumericError("kernel profile is not integrable");
        m.error[k] = std::abs(m.c[k] - coarse[k]);
    }
    return m;
}

//---------------------------------------------------------------------------//
// Positivity screening
//---------------------------------------------------------------------------//

struct WeakPositivity {
    bool weakly_positive = false;
    double shift = 0;   //!< c with Lambda g(t) + c t >= 0 when weakly_positive
};

//! Decide on a dense t-grid whether Lambda g(t) + c t >= 0 for some c.
inline WeakPositivity weakly_positive(const ZonalProfile& g) {
    constexpr int samples = 4096;
    std::vector<double> ts{-1.0, 1.0};
    for (int i = 0; i < samples; ++i)
        ts.push_back(-1.0 + 2.0 * (i + 0.5) / samples);
    double scale = 0;
    for (double t : ts)
        scale = std::max(scale, std::abs(g(t)));
    const double tol = 1e-10 * scale;

    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool ok = g(0.0) >= -tol;
    for (double t : ts) {
        double v = g(t);
        if (t > 0)
            lower = std::max(lower, (-v - tol) / t);
        else if (t < 0)
            upper = std::min(upper, (v + tol) / -t);
    }
    WeakPositivity out;
    out.weakly_positive = ok && lower <= upper;
    if (out.weakly_positive)
        out.shift = std::clamp(0.0, lower, upper);
    return out;
}

struct SublinearityResult {
    bool pass = true;
    Vec3 x = Vec3::Zero();
    Vec3 y = Vec3::Zero();
    double excess = 0;           //!< h(x+y) - h(x) - h(y) at the reported pair
    long pairs_checked = 0;
};

//! Sampled test whether h(x) = |x| Lambda g(x.e/|x|) with e = e_3 is
//! sublinear: all pairs of a 146-direction grid plus \c random_pairs seeded
//! random pairs with random lengths. A pass is evidence, not a proof.
inline SublinearityResult is_support_profile(const ZonalProfile& g, std::uint64_t seed = 0,
                                             int random_pairs = 10000) {
    auto h = [&](const Vec3& x) {
        double r = x.norm();
        return r < 1e-300 ? 0.0 : r * g(x.z() / r);
    };
    double scale = 0;
    for (int i = 0; i <= 256; ++i)
        scale = std::max(scale, std::abs(g(-1.0 + i / 128.0)));
    const double tol = 1e-10 * std::max(scale, 1e-300);

    SublinearityResult res;
    auto test = [&](const Vec3& x, const Vec3& y) {
        ++res.pairs_checked;
        double excess = h(x + y) - h(x) - h(y);
        if (excess > tol * (x.norm() + y.norm()) && (res.pass || excess > res.excess)) {
            res.pass = false;
            res.x = x;
            res.y = y;
            res.excess = excess;
        }
    };
    const auto dirs = fibonacci_directions(146);
    for (const auto& x : dirs)
        for (const auto& y : dirs)
            test(x, y);
    Rng rng(seed);
    for (int i = 0; i < random_pairs; ++i) {
        Vec3 x = rng.direction() * rng.uniform(0.1, 2.0);
        Vec3 y = rng.direction() * rng.uniform(0.1, 2.0);
        test(x, y);
    }
    return res;
}

//---------------------------------------------------------------------------//
// Pair integrals of two zonal profiles
//---------------------------------------------------------------------------//



//! Z(s) = int_{S^2} Lambda f(w.a) Lambda g(w.b) dw with a.b = s, computed
//! with the polar angle measured from a (outer, profile f) and the azimuth
//! average of g inside. Both kinks and level-circle tangencies are panel
//! boundaries.
inline double pair_integral(const ZonalProfile& f, const ZonalProfile& g, double s,
                            int order = 32) {
    s = clamp_unit(s);
    const double sigma = std::acos(s);
    std::vector<double> cuts;
    for (double b : f.breakpoints())
        if (b > -1.0 && b < 1.0)
            cuts.push_back(std::acos(b));
    for (double b : g.breakpoints_with_ends()) {
        double beta = std::acos(clamp_unit(b));
        for (double th : {std::abs(sigma - beta), sigma + beta, 2 * pi - sigma - beta})
            if (th > 0 && th < pi)
                cuts.push_back(th);
    }
    PanelRule outer = detail::clustered_panels(0.0, pi, cuts, order);

    const double ss = std::sqrt(std::max(0.0, 1.0 - s * s));
    double total = 0;
    std::vector<double> icuts;
    for (size_t i = 0; i < outer.nodes.size(); ++i) {
        const double th = outer.nodes[i];
        const double ct = std::cos(th), st = std::sin(th);
        const double fv = f(ct);
        if (fv == 0.0)
            continue;
        const double r = st * ss;
        double avg;
        if (r < 1e-300) {
            avg = g(ct * s);
        } else {
            detail::azimuth_cuts(g, s * ct, r, icuts);
            PanelRule inner = detail::clustered_panels(0.0, pi, icuts, order);
            double acc = 0;
            for (size_t j = 0; j < inner.nodes.size(); ++j)
                acc += inner.weights[j] * g(s * ct + r * std::cos(inner.nodes[j]));
            avg = acc / pi;
        }
        total += outer.weights[i] * 0.5 * st * fv * avg;
    }
    return total;
}

//! Profile s -> pair_integral(f, g, s), the zonal convolution of f and g.
//! Its breakpoints are the s = cos(beta_f +- beta_g) where level circles of
//! the two profiles become tangent.
inline ZonalProfile convolve_profiles(const ZonalProfile& f, const ZonalProfile& g,
                                      int order = 32) {
    return {[f, g, order](double s) { return pair_integral(f, g, s, order); },
            f.label() + "*" + g.label(), Parity::none,
            detail::tangency_breakpoints(f.breakpoints_with_ends(), g.breakpoints_with_ends())};
}


//---------------------------------------------------------------------------//
// Tabulated profiles for expensive evaluations
//---------------------------------------------------------------------------//

//! Piecewise Chebyshev interpolant of a profile in theta = arccos t. Panels
//! end at the profile's breakpoints; inside a panel theta is a smoothstep
//! image of the Chebyshev variable so that power-type singularities at the
//! panel ends are resolved.
class ChebyshevProfileTable {
  public:
    ChebyshevProfileTable(const ZonalProfile& g, int degree = 32) : degree_(degree) {
        std::vector<double> th{0.0, pi};
        for (double b : g.breakpoints())
            if (b > -1.0 && b < 1.0)
                th.push_back(std::acos(b));
        std::sort(th.begin(), th.end());
        // halving every panel keeps the nearest singularity of the
        // continuation away from the interpolation interval
        for (size_t p = 0; p + 1 < th.size(); ++p)
            if (th[p + 1] - th[p] > 1e-12) {
                edges_.push_back(th[p]);
                edges_.push_back(0.5 * (th[p] + th[p + 1]));
            }
        edges_.push_back(pi);
        const int n = degree_;
        nodes_.resize(n + 1);
        bary_.resize(n + 1);
        for (int j = 0; j <= n; ++j) {
            nodes_[j] = 0.5 * (1.0 - std::cos(pi * j / n));   // in [0,1]
            bary_[j] = (j % 2 ? -1.0 : 1.0) * (j == 0 || j == n ? 0.5 : 1.0);
        }
        values_.resize(edges_.size() - 1);
        for (size_t p = 0; p + 1 < edges_.size(); ++p) {
            values_[p].resize(n + 1);
            for (int j = 0; j <= n; ++j)
                values_[p][j] = g(std::cos(theta_of(p, nodes_[j])));
        }
    }

    double operator()(double t) const {
        double th = std::acos(clamp_unit(t));
        size_t p = std::upper_bound(edges_.begin(), edges_.end(), th) - edges_.begin();
        p = std::clamp<size_t>(p, 1, edges_.size() - 1) - 1;
        double y = (th - edges_[p]) / (edges_[p + 1] - edges_[p]);
        y = std::clamp(y, 0.0, 1.0);
        // inverse smoothstep: x^2 (3 - 2x) = y
        double x = 0.5 - std::sin(std::asin(1.0 - 2.0 * y) / 3.0);
        double num = 0, den = 0;
        for (int j = 0; j <= degree_; ++j) {
            double d = x - nodes_[j];
            if (d == 0.0)
                return values_[p][j];
            double w = bary_[j] / d;
            num += w * values_[p][j];
            den += w;
        }
        return num / den;
    }

  private:
    double theta_of(size_t p, double x) const {
        return edges_[p] + (edges_[p + 1] - edges_[p]) * x * x * (3 - 2 * x);
    }

    int degree_;
    std::vector<double> edges_;
    std::vector<double> nodes_, bary_;
    std::vector<std::vector<double>> values_;
};

//! The profile replaced by its piecewise Chebyshev table (same breakpoints).
inline ZonalProfile tabulate(const ZonalProfile& g, int degree = 32) {
    auto table = std::make_shared<ChebyshevProfileTable>(g, degree);
    return {[table](double t) { return (*table)(t); }, g.label(), g.parity(), g.breakpoints()};
}

//---------------------------------------------------------------------------//
// Approximate identity
//---------------------------------------------------------------------------//

//! mu * cap(alpha) as a density with respect to the probability measure.
class SmoothedMeasure {
  public:
    SmoothedMeasure(DiscreteSurfaceMeasure mu, double alpha)
        : mu_(std::move(mu)), cap_(cap_kernel(alpha)), alpha_(alpha) {}

    double alpha() const { return alpha_; }
    const ZonalProfile& kernel() const { return cap_; }

    double density(const Vec3& u) const { return convolve_measure(mu_, cap_, u); }

    //! int density dw, each atom's cap integrated in its own frame.
    double total_mass(int order = 24) const {
        std::vector<double> br = cap_.breakpoints();
        ZonalFrameRule rule(br, order, 8);
        double m = 0;
        for (const auto& a : mu_.atoms())
            m += a.weight * rule.integrate(a.normal, cap_, [](const Vec3&) { return 1.0; });
        return m;
    }

    //! int Lambda g(u.w) density(w) dw = sum_i a_i Z_{cap,g}(u.u_i).
    double convolve(const ZonalProfile& g, const Vec3& u, int order = 24) const {
        require_unit(u);
        double v = 0;
        for (const auto& a : mu_.atoms())
            v += a.weight * pair_integral(cap_, g, u.dot(a.normal), order);
        return v;
    }

  private:
    DiscreteSurfaceMeasure mu_;
    ZonalProfile cap_;
    double alpha_;
};

inline SmoothedMeasure smooth(const DiscreteSurfaceMeasure& mu, double alpha) {
    if (!(alpha > 0))
        throw InputError("smoothing angle must be positive");
    return SmoothedMeasure(mu, std::min(alpha, pi));
}

} // namespace bmh
