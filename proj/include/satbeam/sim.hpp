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

#ifndef satbeam_sim_H
#define satbeam_sim_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "satbeam/beamformer.hpp"
#include "satbeam/channel.hpp"
#include "satbeam/pa.hpp"
#include "satbeam/rng.hpp"
#include "satbeam/types.hpp"

namespace satbeam::sim
{
    // Per-chain Saleh coefficient draw: base + jitter * U[0,1], independently
    // per coefficient and per chain.
    struct SalehDist
    {
        double alpha_base = 0.9445;
        double alpha_jitter = 0.1;
        double beta_base = 0.5138;
        double beta_jitter = 0.1;
        double alpha_phi_base = 4.0033;
        double alpha_phi_jitter = 1.0;
        double beta_phi_base = 9.1040;
        double beta_phi_jitter = 1.0;

        void validate() const; // throws ConfigError
    };

    pa::PaBank draw_saleh_bank(std::uint64_t seed, int m, const SalehDist &dist);
    pa::PaBank draw_saleh_bank(Rng &rng, int m, const SalehDist &dist);

    // Rate from the phase-aligned output amplitudes: log2(1 + (l_ss'zbar)^2/sigma2).
    double evaluate_rate(std::span<const double> l_ss, std::span<const double> zbar,
                         double sigma2_w);

    // Rate through the realized complex pipeline: log2(1 + |h' z|^2 / sigma2).
    // Every scheme in a sweep is scored by this one evaluator.
    double achieved_rate(std::span<const std::complex<double>> h,
                         std::span<const std::complex<double>> z, double sigma2_w);

    // Monte Carlo estimate of the received interference power at the
    // terrestrial UT over the unknown feed phase.
    double estimate_interference(std::span<const double> l_st, const BeamWeights &weights,
                                 const pa::PaBank &bank, double theta0,
                                 int n_phase_samples, Rng &rng);

    enum class SweepVariable
    {
        eps_dbm,
        power_dbw
    };

    enum class Scheme
    {
        proposed = 0,
        mrt_scaled = 1,
        linear_ignorant_capped = 2
    };

    inline constexpr std::array<const char *, 3> kSchemeNames = {
        "proposed", "mrt_scaled", "linear_ignorant_capped"};

    struct ExperimentConfig
    {
        int m = 16;
        int trials = 200;
        SweepVariable variable = SweepVariable::eps_dbm;
        std::vector<double> values;     // sweep points in the variable's unit
        double fixed_power_dbw = 12.0;  // used when sweeping eps
        double fixed_eps_dbm = -107.0;  // used when sweeping power
        double sigma2_dbm = -107.0;
        double theta0 = 0.0;
        SalehDist saleh;
        channel::ScenarioConfig channel_cfg;
        std::uint64_t seed = 1;
        int interference_samples = 16;

        void validate() const; // throws ConfigError
    };

    struct TrialRecord
    {
        int trial;
        double sweep_value;
        Scheme scheme;
        double rate_bps_hz;
        double interference_w;
    };

    struct SweepCell
    {
        double sweep_value;
        Scheme scheme;
        double mean_rate;
        double stderr_rate;
        double mean_interference_w;
        int trials;
    };

    struct SweepResult
    {
        SweepVariable variable;
        std::vector<SweepCell> cells;      // sweep-value-major, scheme order as in Scheme
        std::vector<TrialRecord> records;  // every (trial, value, scheme) sample
    };

    // Runs the Monte Carlo sweep. All schemes inside one trial see the same
    // channel and PA draws (common random numbers), and trials use seeds
    // derived from the base seed, so results are reproducible and
    // order-independent.
    SweepResult run_sweep(const ExperimentConfig &cfg);
}

#endif
