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

#include "satbeam/beamformer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "barrier.hpp"
#include "satbeam/errors.hpp"

namespace satbeam::bf
{
    namespace
    {
        constexpr double kInf = std::numeric_limits<double>::infinity();

        void check_box(const pa::PaBank &bank, const SubstitutedPoint &zbar)
        {
            if (zbar.zbar.size() != bank.size())
                throw std::invalid_argument("substituted point has " +
                                            std::to_string(zbar.zbar.size()) +
                                            " entries for a PA bank of size " +
                                            std::to_string(bank.size()));
        }

        // Shared kernels for the derivatives of f, in terms of nu and
        // t = beta*nu^2 (t < 1 strictly inside the box).
        double grad_f_at(const pa::SalehParams &p, double nu)
        {
            const double t = p.beta * nu * nu;
            if (t >= 1.0)
                throw std::domain_error(
                    "input-power constraint derivative is singular at the PA saturation output");
            const double one_plus = 1.0 + t;
            return 2.0 * nu * one_plus * one_plus / (p.alpha * (1.0 - t));
        }

        double hess_f_at(const pa::SalehParams &p, double nu)
        {
            const double t = p.beta * nu * nu;
            if (t >= 1.0)
                throw std::domain_error(
                    "input-power constraint derivative is singular at the PA saturation output");
            const double one_plus = 1.0 + t;
            const double one_minus = 1.0 - t;
            return 2.0 * one_plus * one_plus * one_plus * (1.0 + 6.0 * t - 3.0 * t * t) /
                   (p.alpha * p.alpha * one_minus * one_minus * one_minus);
        }

        class PaPowerTerm final : public detail::SeparableTerm
        {
        public:
            explicit PaPowerTerm(const pa::PaBank &bank) : bank_(bank) {}

            double value(std::size_t i, double z) const override
            {
                const double nu = pa::am_am_inverse(bank_.params[i], z);
                return nu * nu;
            }

            double grad(std::size_t i, double z) const override
            {
                return grad_f_at(bank_.params[i], pa::am_am_inverse(bank_.params[i], z));
            }

            double hess(std::size_t i, double z) const override
            {
                return hess_f_at(bank_.params[i], pa::am_am_inverse(bank_.params[i], z));
            }

        private:
            const pa::PaBank &bank_;
        };

        SolveReport infeasible_report(std::size_t m)
        {
            SolveReport rep;
            rep.weights.amplitudes.assign(m, 0.0);
            rep.weights.phases.assign(m, 0.0);
            rep.zbar_star.zbar.assign(m, 0.0);
            rep.objective = 0.0;
            rep.rate_bps_hz = 0.0;
            rep.kkt_residual = kInf;
            rep.iterations = 0;
            rep.status = SolveStatus::infeasible_input;
            return rep;
        }
    }

    void ProblemSpec::validate() const
    {
        const std::size_t m = l_ss.size();
        if (m < 1)
            throw ConfigError("l_ss must have at least one entry");
        if (l_st.size() != m)
            throw ConfigError("l_st has " + std::to_string(l_st.size()) +
                              " entries but l_ss has " + std::to_string(m));
        if (bank.size() != m)
            throw ConfigError("PA bank has " + std::to_string(bank.size()) +
                              " chains but l_ss has " + std::to_string(m));
        for (double v : l_ss)
            if (!std::isfinite(v) || v < 0.0)
                throw ConfigError("l_ss entries must be finite and >= 0");
        for (double v : l_st)
            if (!std::isfinite(v) || v < 0.0)
                throw ConfigError("l_st entries must be finite and >= 0");
        if (!std::isfinite(power_limit_w) || power_limit_w <= 0.0)
            throw ConfigError("power_limit_w must be finite and > 0");
        if (!std::isfinite(interference_eps_w) || interference_eps_w <= 0.0)
            throw ConfigError("interference_eps_w must be finite and > 0");
        if (!std::isfinite(noise_sigma2_w) || noise_sigma2_w <= 0.0)
            throw ConfigError("noise_sigma2_w must be finite and > 0");
        if (!std::isfinite(theta0))
            throw ConfigError("theta0 must be finite");
        for (const auto &p : bank.params)
        {
            try
            {
                p.validate();
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(std::string("PA bank: ") + e.what());
            }
        }
    }

    const char *to_string(SolveStatus s)
    {
        switch (s)
        {
        case SolveStatus::optimal:
            return "optimal";
        case SolveStatus::max_iterations:
            return "max-iterations";
        case SolveStatus::infeasible_input:
            return "infeasible-input";
        }
        return "unknown";
    }

    double power_constraint_f(const pa::PaBank &bank, const SubstitutedPoint &zbar,
                              double power_limit_w)
    {
        check_box(bank, zbar);
        double s = 0.0;
        for (std::size_t i = 0; i < bank.size(); ++i)
        {
            const double nu = pa::am_am_inverse(bank.params[i], zbar.zbar[i]);
            s += nu * nu;
        }
        return s - power_limit_w;
    }

    std::vector<double> power_constraint_gradient(const pa::PaBank &bank,
                                                  const SubstitutedPoint &zbar)
    {
        check_box(bank, zbar);
        std::vector<double> g(bank.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] = grad_f_at(bank.params[i],
                             pa::am_am_inverse(bank.params[i], zbar.zbar[i]));
        return g;
    }

    std::vector<double> power_constraint_hessian_diag(const pa::PaBank &bank,
                                                      const SubstitutedPoint &zbar)
    {
        check_box(bank, zbar);
        std::vector<double> h(bank.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            h[i] = hess_f_at(bank.params[i],
                             pa::am_am_inverse(bank.params[i], zbar.zbar[i]));
        return h;
    }

    SubstitutedSolution solve_substituted(const ProblemSpec &spec)
    {
        try
        {
            spec.validate();
        }
        catch (const ConfigError &)
        {
            return {SubstitutedPoint{std::vector<double>(spec.size(), 0.0)}, 0, kInf,
                    SolveStatus::infeasible_input};
        }

        const std::size_t m = spec.size();
        const double sqrt_eps = std::sqrt(spec.interference_eps_w);

        std::vector<double> upper(m);
        for (std::size_t i = 0; i < m; ++i)
            upper[i] = spec.bank.params[i].max_output();

        // Objective scaled to unit max and interference row scaled by
        // 1/sqrt(eps), so the barrier works on O(1) data regardless of the
        // -200 dB channel magnitudes.
        const double cscale = *std::max_element(spec.l_ss.begin(), spec.l_ss.end());
        std::vector<double> c(m), a(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            c[i] = cscale > 0.0 ? spec.l_ss[i] / cscale : 0.0;
            a[i] = spec.l_st[i] / sqrt_eps;
        }

        // Strictly interior start: a fraction of the smallest of the box
        // bound, an equal-split interference cap, and the equal-power-split
        // output level.
        const double lst_max = *std::max_element(spec.l_st.begin(), spec.l_st.end());
        const double eq_r = std::sqrt(spec.power_limit_w / static_cast<double>(m));
        std::vector<double> x0(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            const double r_sat = spec.bank.params[i].saturation_input();
            double v = std::min(upper[i], pa::am_am(spec.bank.params[i], std::min(eq_r, r_sat)));
            if (lst_max > 0.0)
                v = std::min(v, sqrt_eps / (static_cast<double>(m) * lst_max));
            x0[i] = 0.25 * v;
        }

        const PaPowerTerm term(spec.bank);
        const detail::BarrierResult res = detail::barrier_maximize(
            c, a, 1.0, term, spec.power_limit_w, upper, std::move(x0));

        // optimal status certifies the residual bound
        const bool optimal = res.converged && res.kkt_residual <= 1e-6;
        return {SubstitutedPoint{res.x}, res.newton_iterations, res.kkt_residual,
                optimal ? SolveStatus::optimal : SolveStatus::max_iterations};
    }

    std::vector<double> recover_amplitudes(const pa::PaBank &bank,
                                           const SubstitutedPoint &zbar)
    {
        check_box(bank, zbar);
        std::vector<double> r(bank.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = pa::am_am_inverse(bank.params[i], zbar.zbar[i]);
        return r;
    }

    std::vector<double> recover_phases(const pa::PaBank &bank,
                                       std::span<const double> amplitudes,
                                       double theta0)
    {
        if (amplitudes.size() != bank.size())
            throw std::invalid_argument("amplitude vector has " +
                                        std::to_string(amplitudes.size()) +
                                        " entries for a PA bank of size " +
                                        std::to_string(bank.size()));
        std::vector<double> theta(bank.size());
        for (std::size_t i = 0; i < theta.size(); ++i)
            theta[i] = -theta0 - pa::am_pm(bank.params[i], amplitudes[i]);
        return theta;
    }

    std::vector<double> fold_to_monotone_region(const pa::PaBank &bank,
                                                std::span<const double> amplitudes)
    {
        if (amplitudes.size() != bank.size())
            throw std::invalid_argument("amplitude vector has " +
                                        std::to_string(amplitudes.size()) +
                                        " entries for a PA bank of size " +
                                        std::to_string(bank.size()));
        std::vector<double> folded(amplitudes.begin(), amplitudes.end());
        for (std::size_t i = 0; i < folded.size(); ++i)
        {
            const pa::SalehParams &p = bank.params[i];
            if (folded[i] > p.saturation_input())
                folded[i] = pa::am_am_inverse(p, pa::am_am(p, folded[i]));
        }
        return folded;
    }

    SolveReport solve(const ProblemSpec &spec)
    {
        try
        {
            spec.validate();
        }
        catch (const ConfigError &)
        {
            return infeasible_report(spec.size());
        }

        const SubstitutedSolution sub = solve_substituted(spec);

        SolveReport rep;
        rep.zbar_star = sub.point;
        rep.weights.amplitudes = recover_amplitudes(spec.bank, sub.point);
        rep.weights.phases = recover_phases(spec.bank, rep.weights.amplitudes, spec.theta0);
        double obj = 0.0;
        for (std::size_t i = 0; i < spec.size(); ++i)
            obj += spec.l_ss[i] * sub.point.zbar[i];
        rep.objective = obj;
        rep.rate_bps_hz = rate_from_signal_power(obj * obj, spec.noise_sigma2_w);
        rep.kkt_residual = sub.kkt_residual;
        rep.iterations = sub.newton_iterations;
        rep.status = sub.status;
        return rep;
    }
}
