// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/minkowski.hpp
//! Reconstruction of a polytope from its surface area measure.
//!
//! The support numbers minimize E(h) = sum_i a_i h_i - log V(h), where V(h)
//! is the volume of {x : u_i . x <= h_i}. E is convex (log V is concave by
//! Brunn-Minkowski) and invariant under translations because sum a_i u_i =
//! 0. At the minimum the facet areas are V(h) a_i, so a final scaling by
//! V^{-1/2} gives areas a_i. Newton steps use the exact second variation of
//! the volume: dF_i/dh_j = l_ij / sin(theta_ij) for adjacent facets and
//! dF_i/dh_i = -sum_j l_ij cot(theta_ij).
//---------------------------------------------------------------------------//
#pragma once

#include "halfspace.hpp"
#include "measure.hpp"
#include "polytope.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace bmh {

//! The target measure cannot be a surface area measure.
class InstanceError : public InputError {
  public:
    using InputError::InputError;
};

struct MinkowskiOptions {
    int max_iterations = 200;
    double tolerance = 1e-12;    //!< max_i |F_i / V - a_i| / a_i at the optimum
    double moment_tolerance = 1e-9;   //!< relative moment defect accepted
    double spread_tolerance = 1e-9;   //!< minimal relative spread
};

struct MinkowskiIteration {
    int iteration;
    double objective;   //!< sum a_i h_i / V^{1/3}, scale invariant
    double gradient;    //!< max_i |a_i - F_i / V| / a_i
    double step;
};

struct MinkowskiSolution {
    std::vector<Vec3> normals;
    std::vector<double> target;
    std::vector<double> support;     //!< h_i after Steiner alignment
    Polytope3 body;
    std::vector<double> residual;    //!< achieved minus target area
    double max_relative_residual = 0;
    std::vector<MinkowskiIteration> log;
};

class ConvergenceError : public NumericError {
  public:
    ConvergenceError(const std::string& what, MinkowskiSolution best)
        : NumericError(what), best_(std::move(best)) {}
    const MinkowskiSolution& best_iterate() const { return best_; }

  private:
    MinkowskiSolution best_;
};

namespace detail {

inline void check_instance(const DiscreteSurfaceMeasure& mu, const MinkowskiOptions& opt) {
    if (mu.size() < 4)
        throw InstanceError("a measure with fewer than 4 atoms cannot bound a body");
    if (mu.moment_defect() > opt.moment_tolerance)
        throw InstanceError("moment violation: sum of a_i u_i is not zero (relative defect "
                            + std::to_string(mu.moment_defect()) + ")");
    if (mu.spread() < opt.spread_tolerance)
        throw InstanceError("great-circle concentration: atoms lie on a great circle");
}

struct MinkowskiState {
    std::vector<double> h;
    HalfspaceCell cell;
    double energy = 0;
};

inline bool evaluate_state(const std::vector<Vec3>& u, const std::vector<double>& a,
                           MinkowskiState& s) {
    for (double x : s.h)
        if (!(x > 0))
            return false;
    try {
        s.cell = intersect_halfspaces(u, s.h, Vec3::Zero());
    } catch (const NumericError&) {
        return false;
    }
    if (!(s.cell.volume > 0))
        return false;
    s.energy = -std::log(s.cell.volume);
    for (size_t i = 0; i < a.size(); ++i)
        s.energy += a[i] * s.h[i];
    return true;
}

// Translate so that the mean of the cell vertices is the origin.
inline void recenter(const std::vector<Vec3>& u, MinkowskiState& s) {
    Vec3 c = Vec3::Zero();
    for (const auto& v : s.cell.vertices)
        c += v;
    c /= static_cast<double>(s.cell.vertices.size());
    for (size_t i = 0; i < u.size(); ++i)
        s.h[i] -= u[i].dot(c);
    for (auto& v : s.cell.vertices)
        v -= c;
}

} // namespace detail

inline MinkowskiSolution solve_minkowski(const DiscreteSurfaceMeasure& target,
                                         const MinkowskiOptions& opt = {}) {
    detail::check_instance(target, opt);
    const size_t m = target.size();
    std::vector<Vec3> u;
    std::vector<double> a;
    for (const auto& at : target.atoms()) {
        u.push_back(at.normal);
        a.push_back(at.weight);
    }

    MinkowskiSolution out;
    out.normals = u;
    out.target = a;

    detail::MinkowskiState s;
    s.h.assign(m, 1.0);
    if (!detail::evaluate_state(u, a, s))
        throw InstanceError("normals do not bound a body");

    auto scale_optimally = [&](detail::MinkowskiState& st) {
        double ah = 0;
        for (size_t i = 0; i < m; ++i)
            ah += a[i] * st.h[i];
        for (double& x : st.h)
            x *= 3.0 / ah;
        detail::evaluate_state(u, a, st);
    };
    scale_optimally(s);

    auto finish = [&](const detail::MinkowskiState& st) {
        MinkowskiSolution sol = out;
        const double scale = 1.0 / std::sqrt(st.cell.volume);
        std::vector<Vec3> verts;
        for (const auto& v : st.cell.vertices)
            verts.push_back(v * scale);
        sol.body = Polytope3::from_points(verts);
        if (sol.body.full_dimensional())
            sol.body = sol.body.translated(-steiner_point(sol.body));
        sol.support.resize(m);
        sol.residual.resize(m);
        sol.max_relative_residual = 0;
        for (size_t i = 0; i < m; ++i) {
            sol.support[i] = sol.body.support(u[i]);
            double area = st.cell.areas[i] * scale * scale;
            sol.residual[i] = area - a[i];
            sol.max_relative_residual = std::max(sol.max_relative_residual,
                                                 std::abs(sol.residual[i]) / a[i]);
        }
        return sol;
    };

    double step = 0;
    for (int it = 0;; ++it) {
        const double vol = s.cell.volume;
        Eigen::VectorXd g(m);
        double gmax = 0, ah = 0;
        for (size_t i = 0; i < m; ++i) {
            g[i] = a[i] - s.cell.areas[i] / vol;
            gmax = std::max(gmax, std::abs(g[i]) / a[i]);
            ah += a[i] * s.h[i];
        }
        out.log.push_back({it, ah / std::cbrt(vol), gmax, step});
        if (gmax <= opt.tolerance) {
            MinkowskiSolution sol = finish(s);
            sol.log = out.log;
            return sol;
        }
        if (it >= opt.max_iterations) {
            MinkowskiSolution best = finish(s);
            best.log = out.log;
            throw ConvergenceError("Minkowski solver did not converge in "
                                       + std::to_string(opt.max_iterations) + " iterations",
                                   std::move(best));
        }

        // Hessian of E = -Hess(V)/V + F F^T / V^2
        Eigen::MatrixXd hv = Eigen::MatrixXd::Zero(m, m);
        for (const auto& [ij, len] : s.cell.edge_lengths) {
            auto [i, j] = ij;
            if (len <= 0)
                continue;
            double c = clamp_unit(u[i].dot(u[j]));
            double sn = std::sqrt(std::max(1e-300, 1.0 - c * c));
            hv(i, j) += len / sn;
            hv(j, i) += len / sn;
            hv(i, i) -= len * c / sn;
            hv(j, j) -= len * c / sn;
        }
        Eigen::VectorXd f(m);
        for (size_t i = 0; i < m; ++i)
            f[i] = s.cell.areas[i];
        Eigen::MatrixXd hess = -hv / vol + f * f.transpose() / (vol * vol);
        // translations span the null space; a small ridge keeps the system
        // definite and handles facets that are currently inactive
        double ridge = 1e-10 * std::max(1e-300, hess.diagonal().cwiseAbs().maxCoeff());
        Eigen::VectorXd d;
        for (int attempt = 0; attempt < 8; ++attempt) {
            Eigen::LDLT<Eigen::MatrixXd> ldlt(hess + ridge * Eigen::MatrixXd::Identity(m, m));
            d = ldlt.solve(-g);
            if (ldlt.info() == Eigen::Success && d.allFinite() && g.dot(d) < 0)
                break;
            ridge *= 100;
            d = -g;
        }

        // Armijo backtracking; infeasible trial points are rejected
        const double slope = g.dot(d);
        double alpha = 1.0;
        detail::MinkowskiState trial;
        bool accepted = false;
        for (int k = 0; k < 60; ++k, alpha *= 0.5) {
            trial.h = s.h;
            for (size_t i = 0; i < m; ++i)
                trial.h[i] += alpha * d[i];
            if (detail::evaluate_state(u, a, trial)
                && trial.energy <= s.energy + 1e-4 * alpha * slope + 1e-15 * std::abs(s.energy)) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            // no further decrease is representable; accept if close enough
            if (gmax <= std::sqrt(opt.tolerance)) {
                MinkowskiSolution sol = finish(s);
                sol.log = out.log;
                if (sol.max_relative_residual <= 1e-8)
                    return sol;
            }
            MinkowskiSolution best = finish(s);
            best.log = out.log;
            throw ConvergenceError("Minkowski solver line search failed", std::move(best));
        }
        step = alpha;
        detail::recenter(u, trial);
        scale_optimally(trial);
        s = std::move(trial);
    }
}

//! Blaschke body K # (-K), origin symmetric.
inline Polytope3 blaschke_body(const Polytope3& k, const MinkowskiOptions& opt = {}) {
    auto mu = surface_measure(k);
    return solve_minkowski(blaschke_sum(mu, mu.reflected()), opt).body;
}

} // namespace bmh
