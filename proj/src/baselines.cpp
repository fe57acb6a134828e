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

#include "satbeam/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "barrier.hpp"

namespace satbeam::baselines
{
    namespace
    {
        constexpr double kInf = std::numeric_limits<double>::infinity();

        void check_channel(const bf::ProblemSpec &spec,
                           std::span<const std::complex<double>> h_ss)
        {
            if (h_ss.size() != spec.size())
                throw std::invalid_argument("h_ss has " + std::to_string(h_ss.size()) +
                                            " entries but the problem has " +
                                            std::to_string(spec.size()));
        }

        std::vector<double> matched_phases(const bf::ProblemSpec &spec,
                                           std::span<const std::complex<double>> h_ss)
        {
            std::vector<double> theta(spec.size());
            for (std::size_t i = 0; i < theta.size(); ++i)
                theta[i] = -spec.theta0 + std::arg(h_ss[i]);
            return theta;
        }

        class QuadraticTerm final : public bf::detail::SeparableTerm
        {
        public:
            double value(std::size_t, double x) const override { return x * x; }
            double grad(std::size_t, double x) const override { return 2.0 * x; }
            double hess(std::size_t, double) const override { return 2.0; }
        };
    }

    BeamWeights mrt_scaled(const bf::ProblemSpec &spec,
                           std::span<const std::complex<double>> h_ss)
    {
        spec.validate();
        check_channel(spec, h_ss);
        const std::size_t m = spec.size();

        BeamWeights w;
        w.amplitudes.assign(m, 0.0);
        w.phases = matched_phases(spec, h_ss);

        double norm2 = 0.0;
        for (const auto &h : h_ss)
            norm2 += std::norm(h);
        if (norm2 == 0.0)
            return w;

        std::vector<double> rhat(m);
        const double inv_norm = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < m; ++i)
            rhat[i] = std::abs(h_ss[i]) * inv_norm;

        const auto feasible = [&](double cval)
        {
            if (cval * cval > spec.power_limit_w * (1.0 + 1e-12))
                return false;
            double bound = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                bound += spec.l_st[i] * pa::am_am(spec.bank.params[i], cval * rhat[i]);
            return bound * bound <= spec.interference_eps_w * (1.0 + 1e-12);
        };

        // c = 0 is always feasible; the power limit caps the bracket.
        double c = std::sqrt(spec.power_limit_w);
        if (!feasible(c))
        {
            double lo = 0.0, hi = c;
            for (int it = 0; it < 500 && hi - lo > 1e-10 * std::max(hi, 1e-300); ++it)
            {
                const double mid = 0.5 * (lo + hi);
                (feasible(mid) ? lo : hi) = mid;
            }
            c = lo;
        }

        for (std::size_t i = 0; i < m; ++i)
            w.amplitudes[i] = c * rhat[i];
        return w;
    }

    BeamWeights linear_ignorant_capped(const bf::ProblemSpec &spec,
                                       std::span<const std::complex<double>> h_ss)
    {
        spec.validate();
        check_channel(spec, h_ss);
        const std::size_t m = spec.size();

        BeamWeights w;
        w.amplitudes.assign(m, 0.0);
        w.phases = matched_phases(spec, h_ss);

        const double cscale = *std::max_element(spec.l_ss.begin(), spec.l_ss.end());
        if (cscale == 0.0)
            return w;

        const double sqrt_eps = std::sqrt(spec.interference_eps_w);
        std::vector<double> c(m), a(m), upper(m, kInf);
        for (std::size_t i = 0; i < m; ++i)
        {
            c[i] = spec.l_ss[i] / cscale;
            a[i] = spec.l_st[i] / sqrt_eps;
        }

        const double lst_max = *std::max_element(spec.l_st.begin(), spec.l_st.end());
        double start = std::sqrt(spec.power_limit_w / static_cast<double>(m));
        if (lst_max > 0.0)
            start = std::min(start, sqrt_eps / (static_cast<double>(m) * lst_max));
        std::vector<double> x0(m, 0.25 * start);

        const QuadraticTerm term;
        const bf::detail::BarrierResult res = bf::detail::barrier_maximize(
            c, a, 1.0, term, spec.power_limit_w, upper, std::move(x0));

        w.amplitudes = res.x;
        return w;
    }
}
