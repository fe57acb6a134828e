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

#include "satbeam/sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "satbeam/baselines.hpp"
#include "satbeam/errors.hpp"

namespace satbeam::sim
{
    void SalehDist::validate() const
    {
        if (!(alpha_base > 0.0) || !(beta_base > 0.0))
            throw ConfigError("saleh alpha_base and beta_base must be > 0");
        if (alpha_jitter < 0.0 || beta_jitter < 0.0 || alpha_phi_jitter < 0.0 ||
            beta_phi_jitter < 0.0)
            throw ConfigError("saleh jitters must be >= 0");
        if (beta_phi_base < 0.0)
            throw ConfigError("saleh beta_phi_base must be >= 0");
        if (!std::isfinite(alpha_base) || !std::isfinite(beta_base) ||
            !std::isfinite(alpha_phi_base) || !std::isfinite(beta_phi_base))
            throw ConfigError("saleh base values must be finite");
    }

    pa::PaBank draw_saleh_bank(Rng &rng, int m, const SalehDist &dist)
    {
        dist.validate();
        if (m < 1)
            throw ConfigError("antenna count m must be >= 1");
        pa::PaBank bank;
        bank.params.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
        {
            pa::SalehParams p;
            p.alpha = dist.alpha_base + dist.alpha_jitter * rng.uniform();
            p.beta = dist.beta_base + dist.beta_jitter * rng.uniform();
            p.alpha_phi = dist.alpha_phi_base + dist.alpha_phi_jitter * rng.uniform();
            p.beta_phi = dist.beta_phi_base + dist.beta_phi_jitter * rng.uniform();
            bank.params.push_back(p);
        }
        return bank;
    }

    pa::PaBank draw_saleh_bank(std::uint64_t seed, int m, const SalehDist &dist)
    {
        Rng rng(seed);
        return draw_saleh_bank(rng, m, dist);
    }

    double evaluate_rate(std::span<const double> l_ss, std::span<const double> zbar,
                         double sigma2_w)
    {
        if (l_ss.size() != zbar.size())
            throw std::invalid_argument("l_ss and zbar must have equal length");
        if (!(sigma2_w > 0.0))
            throw std::invalid_argument("sigma2 must be > 0");
        double s = 0.0;
        for (std::size_t i = 0; i < l_ss.size(); ++i)
            s += l_ss[i] * zbar[i];
        return rate_from_signal_power(s * s, sigma2_w);
    }

    double achieved_rate(std::span<const std::complex<double>> h,
                         std::span<const std::complex<double>> z, double sigma2_w)
    {
        if (h.size() != z.size())
            throw std::invalid_argument("channel and signal vectors must have equal length");
        if (!(sigma2_w > 0.0))
            throw std::invalid_argument("sigma2 must be > 0");
        std::complex<double> y = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i)
            y += std::conj(h[i]) * z[i];
        return rate_from_signal_power(std::norm(y), sigma2_w);
    }

    double estimate_interference(std::span<const double> l_st, const BeamWeights &weights,
                                 const pa::PaBank &bank, double theta0,
                                 int n_phase_samples, Rng &rng)
    {
        if (l_st.size() != bank.size())
            throw std::invalid_argument("l_st and PA bank must have equal length");
        if (n_phase_samples < 1)
            throw std::invalid_argument("n_phase_samples must be >= 1");
        const std::vector<std::complex<double>> z = pa::amplify(bank, weights, theta0);
        double acc = 0.0;
        for (int s = 0; s < n_phase_samples; ++s)
        {
            const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const std::complex<double> rot = std::polar(1.0, phi); // conj of e^{-j phi}
            std::complex<double> y = 0.0;
            for (std::size_t i = 0; i < l_st.size(); ++i)
                y += l_st[i] * rot * z[i];
            acc += std::norm(y);
        }
        return acc / n_phase_samples;
    }

    void ExperimentConfig::validate() const
    {
        if (m < 1)
            throw ConfigError("m must be >= 1");
        if (trials < 1)
            throw ConfigError("trials must be >= 1");
        if (values.empty())
            throw ConfigError("sweep.values must not be empty");
        for (double v : values)
            if (!std::isfinite(v))
                throw ConfigError("sweep.values must be finite");
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] <= values[i - 1])
                throw ConfigError("sweep.values must be sorted strictly ascending");
        if (!std::isfinite(fixed_power_dbw) || !std::isfinite(fixed_eps_dbm) ||
            !std::isfinite(sigma2_dbm) || !std::isfinite(theta0))
            throw ConfigError("sweep fixed quantities must be finite");
        if (interference_samples < 1)
            throw ConfigError("interference_samples must be >= 1");
        saleh.validate();
        channel_cfg.validate();
    }

    SweepResult run_sweep(const ExperimentConfig &cfg)
    {
        cfg.validate();
        const double sigma2 = dbm_to_watts(cfg.sigma2_dbm);
        const std::size_t nv = cfg.values.size();

        SweepResult out;
        out.variable = cfg.variable;
        out.records.reserve(static_cast<std::size_t>(cfg.trials) * nv * 3);

        for (int trial = 0; trial < cfg.trials; ++trial)
        {
            const std::uint64_t tseed = Rng::derive(cfg.seed, static_cast<std::uint64_t>(trial));
            Rng rng(tseed);
            const pa::PaBank bank = draw_saleh_bank(rng, cfg.m, cfg.saleh);
            const channel::Scenario scen =
                channel::sample_scenario(rng, tseed, cfg.m, cfg.channel_cfg);
            const double phi_s = rng.uniform(0.0, 2.0 * std::numbers::pi);

            const std::vector<double> l_ss = channel::collapse(scen.sat_ut);
            const std::vector<double> l_st = channel::collapse(scen.terr_ut);
            const std::vector<std::complex<double>> h_ss =
                channel::realize(scen.sat_ut, {phi_s});

            for (std::size_t vi = 0; vi < nv; ++vi)
            {
                bf::ProblemSpec spec;
                spec.l_ss = l_ss;
                spec.l_st = l_st;
                spec.bank = bank;
                spec.noise_sigma2_w = sigma2;
                spec.theta0 = cfg.theta0;
                if (cfg.variable == SweepVariable::eps_dbm)
                {
                    spec.interference_eps_w = dbm_to_watts(cfg.values[vi]);
                    spec.power_limit_w = dbw_to_watts(cfg.fixed_power_dbw);
                }
                else
                {
                    spec.power_limit_w = dbw_to_watts(cfg.values[vi]);
                    spec.interference_eps_w = dbm_to_watts(cfg.fixed_eps_dbm);
                }

                for (int si = 0; si < 3; ++si)
                {
                    const Scheme scheme = static_cast<Scheme>(si);
                    BeamWeights w;
                    switch (scheme)
                    {
                    case Scheme::proposed:
                        w = bf::solve(spec).weights;
                        break;
                    case Scheme::mrt_scaled:
                        w = baselines::mrt_scaled(spec, h_ss);
                        break;
                    case Scheme::linear_ignorant_capped:
                        w = baselines::linear_ignorant_capped(spec, h_ss);
                        break;
                    }
                    const std::vector<std::complex<double>> z =
                        pa::amplify(bank, w, cfg.theta0);
                    const double rate = achieved_rate(h_ss, z, sigma2);
                    Rng irng(Rng::derive(tseed, 1000003ull + vi * 8 + static_cast<std::uint64_t>(si)));
                    const double interf = estimate_interference(
                        l_st, w, bank, cfg.theta0, cfg.interference_samples, irng);
                    out.records.push_back({trial, cfg.values[vi], scheme, rate, interf});
                }
            }
        }

        // Aggregate value-major, scheme-minor; order-independent in the records.
        out.cells.reserve(nv * 3);
        for (std::size_t vi = 0; vi < nv; ++vi)
        {
            for (int si = 0; si < 3; ++si)
            {
                double sum = 0.0, sum2 = 0.0, interf = 0.0;
                int n = 0;
                for (const TrialRecord &rec : out.records)
                {
                    if (rec.sweep_value == cfg.values[vi] && static_cast<int>(rec.scheme) == si)
                    {
                        sum += rec.rate_bps_hz;
                        sum2 += rec.rate_bps_hz * rec.rate_bps_hz;
                        interf += rec.interference_w;
                        ++n;
                    }
                }
                const double mean = sum / n;
                double se = 0.0;
                if (n > 1)
                {
                    const double var = std::max(0.0, (sum2 - n * mean * mean) / (n - 1));
                    se = std::sqrt(var / n);
                }
                out.cells.push_back({cfg.values[vi], static_cast<Scheme>(si), mean, se,
                                     interf / n, n});
            }
        }
        return out;
    }
}
