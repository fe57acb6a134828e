// SPDX-License-Identifier: Apache-2.0
//
// satbeam - beamforming design and link simulation for spectrum-sharing
// satellite-terrestrial networks with nonlinear power amplifiers
// Copyright (C) 2026 the satbeam developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "barrier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace satbeam::bf::detail
{
    namespace
    {
        double dot(const std::vector<double> &x, const std::vector<double> &y)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                s += x[i] * y[i];
            return s;
        }

        struct Workspace
        {
            const std::vector<double> &c;
            const std::vector<double> &a;
            double lin_bound;
            const SeparableTerm &term;
            double cap;
            const std::vector<double> &upper;

            double slack_lin(const std::vector<double> &x) const
            {
                return lin_bound - dot(a, x);
            }

            double slack_cap(const std::vector<double> &x) const
            {
                double s = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i)
                    s += term.value(i, x[i]);
                return cap - s;
            }

            bool strictly_feasible(const std::vector<double> &x) const
            {
                for (std::size_t i = 0; i < x.size(); ++i)
                    if (!(x[i] > 0.0) || x[i] >= upper[i])
                        return false;
                return slack_lin(x) > 0.0 && slack_cap(x) > 0.0;
            }

            // F_mu(x) = -c'x + mu * psi(x) with psi the log barrier of all
            // inequality constraints. Assumes strict feasibility.
            double barrier_value(const std::vector<double> &x, double mu) const
            {
                double psi = -std::log(slack_lin(x)) - std::log(slack_cap(x));
                for (std::size_t i = 0; i < x.size(); ++i)
                {
                    psi -= std::log(x[i]);
                    if (std::isfinite(upper[i]))
                        psi -= std::log(upper[i] - x[i]);
                }
                return -dot(c, x) + mu * psi;
            }
        };

        // Solve (D + p p' + q q') d = rhs with D diagonal positive, O(n).
        std::vector<double> solve_diag_plus_two_rank_one(const std::vector<double> &D,
                                                         const std::vector<double> &p,
                                                         const std::vector<double> &q,
                                                         const std::vector<double> &rhs)
        {
            const std::size_t n = D.size();
            std::vector<double> y(n), u(n), v(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                y[i] = rhs[i] / D[i];
                u[i] = p[i] / D[i];
                v[i] = q[i] / D[i];
            }
            // K = D + pp': K^-1 w = D^-1 w - (p'D^-1 w)/(1 + p'D^-1 p) D^-1 p
            const double denom_p = 1.0 + dot(p, u);
            const double py = dot(p, y) / denom_p;
            const double pv = dot(p, v) / denom_p;
            for (std::size_t i = 0; i < n; ++i)
            {
                y[i] -= py * u[i]; // K^-1 rhs
                v[i] -= pv * u[i]; // K^-1 q
            }
            // H = K + qq'
            const double denom_q = 1.0 + dot(q, v);
            const double qy = dot(q, y) / denom_q;
            for (std::size_t i = 0; i < n; ++i)
                y[i] -= qy * v[i];
            return y;
        }
    }

    BarrierResult barrier_maximize(const std::vector<double> &c,
                                   const std::vector<double> &a, double lin_bound,
                                   const SeparableTerm &term, double cap,
                                   const std::vector<double> &upper,
                                   std::vector<double> x0,
                                   const BarrierOptions &opts)
    {
        const std::size_t n = c.size();
        if (a.size() != n || upper.size() != n || x0.size() != n)
            throw std::logic_error("barrier_maximize: inconsistent dimensions");

        const Workspace w{c, a, lin_bound, term, cap, upper};
        if (!w.strictly_feasible(x0))
            throw std::logic_error("barrier_maximize: start point is not strictly interior");

        int n_ineq = 2 + static_cast<int>(n);
        for (double u : upper)
            if (std::isfinite(u))
                ++n_ineq;

        BarrierResult res;
        res.x = std::move(x0);
        std::vector<double> grad(n), D(n), p(n), q(n), gsep(n), xt(n);

        // Gradient and Hessian factors of F_mu at x; returns the Newton step
        // and the squared Newton decrement.
        const auto newton_direction = [&](const std::vector<double> &x, double mu,
                                          std::vector<double> &step) -> double
        {
            const double s1 = w.slack_lin(x);
            const double s2 = w.slack_cap(x);
            const double sqmu = std::sqrt(mu);
            for (std::size_t i = 0; i < n; ++i)
            {
                const double xi = x[i];
                gsep[i] = term.grad(i, xi);
                double g = -c[i] + mu * (a[i] / s1 + gsep[i] / s2 - 1.0 / xi);
                double d = mu * (term.hess(i, xi) / s2 + 1.0 / (xi * xi));
                if (std::isfinite(upper[i]))
                {
                    const double su = upper[i] - xi;
                    g += mu / su;
                    d += mu / (su * su);
                }
                grad[i] = g;
                D[i] = d;
                p[i] = sqmu * a[i] / s1;
                q[i] = sqmu * gsep[i] / s2;
            }
            std::vector<double> rhs(n);
            for (std::size_t i = 0; i < n; ++i)
                rhs[i] = -grad[i];
            step = solve_diag_plus_two_rank_one(D, p, q, rhs);
            return -dot(grad, step); // lambda^2 >= 0 for positive definite H
        };

        double mu = opts.mu_initial;
        double decrement2 = 0.0;
        for (int stage = 0; stage < opts.max_stages; ++stage)
        {
            for (int it = 0; it < opts.max_newton_per_stage; ++it)
            {
                std::vector<double> step;
                decrement2 = newton_direction(res.x, mu, step);
                const double f0 = w.barrier_value(res.x, mu);
                // stop at the stage target, or once the predicted decrease
                // drops below what double precision can observe in F
                if (decrement2 / 2.0 <=
                    std::max({1e-16, 1e-10 * mu, 1e-15 * std::abs(f0)}))
                    break;

                // fraction-to-boundary on the box and linear constraint
                double alpha = 1.0;
                for (std::size_t i = 0; i < n; ++i)
                {
                    if (step[i] < 0.0)
                        alpha = std::min(alpha, -0.99 * res.x[i] / step[i]);
                    else if (step[i] > 0.0 && std::isfinite(upper[i]))
                        alpha = std::min(alpha, 0.99 * (upper[i] - res.x[i]) / step[i]);
                }
                const double ad = dot(a, step);
                if (ad > 0.0)
                    alpha = std::min(alpha, 0.99 * w.slack_lin(res.x) / ad);

                const double slope = dot(grad, step); // < 0
                bool accepted = false;
                for (int bt = 0; bt < 70; ++bt)
                {
                    for (std::size_t i = 0; i < n; ++i)
                        xt[i] = res.x[i] + alpha * step[i];
                    if (w.strictly_feasible(xt) &&
                        w.barrier_value(xt, mu) <= f0 + 1e-4 * alpha * slope)
                    {
                        accepted = true;
                        break;
                    }
                    alpha *= 0.5;
                }
                if (!accepted)
                    break; // decrease not observable at this precision
                res.x.swap(xt);
                ++res.newton_iterations;
            }

            const double obj = dot(c, res.x);
            res.duality_measure = mu * n_ineq / std::max(std::abs(obj), opts.gap_floor);
            if (res.duality_measure <= opts.rel_gap)
            {
                res.converged = true;
                break;
            }
            mu *= opts.mu_shrink;
        }

        // Scaled KKT residual at the final iterate: the Newton decrement is
        // the H^-1-norm of the Lagrangian stationarity residual under the
        // barrier multipliers lambda_j = mu / s_j (directions without data
        // have zero residual by construction), and the relative duality
        // measure bounds complementarity. Primal feasibility is strict.
        {
            std::vector<double> step;
            const double lam2 = std::max(0.0, newton_direction(res.x, mu, step));
            res.kkt_residual = std::max(std::sqrt(lam2), res.duality_measure);
        }
        return res;
    }
}
