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
//
// Experiment configuration documents and machine-readable result rendering.
//
// Configs are JSON with explicit unit suffixes in every physical key
// (power_limit_dbw / power_limit_w, eps_dbm / eps_w, sigma2_dbm / sigma2_w,
// path_loss_db, peak_gain_db, ...); everything is converted to linear watts
// at parse time. See README for the full schema.

#ifndef satbeam_config_H
#define satbeam_config_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satbeam/beamformer.hpp"
#include "satbeam/pa.hpp"
#include "satbeam/sim.hpp"

namespace satbeam::config
{
    struct PaCurveJob
    {
        pa::SalehParams params{0.9445, 0.5138, 4.0033, 9.1040};
        double r_min = 0.0;
        double r_max = 3.0;
        double step = 0.01;
    };

    // Checks a config document and returns every violation found (empty list
    // means the document is clean). Never throws on bad content.
    std::vector<std::string> validate_config_text(const std::string &json_text);

    // Builds a solvable problem from the `solve` section; explicit l_ss/l_st
    // and saleh_params vectors win over sampling with the config seed.
    // Throws ConfigError on any violation.
    bf::ProblemSpec build_problem(const std::string &json_text,
                                  std::optional<std::uint64_t> seed_override);

    // Builds the Monte Carlo sweep configuration from the `sweep` section.
    sim::ExperimentConfig build_experiment(const std::string &json_text,
                                           std::optional<std::uint64_t> seed_override);

    // PA curve parameters from the `pa_curve` section; all defaults if the
    // section (or the whole document) is absent.
    PaCurveJob build_pa_curve(const std::string &json_text);

    // --- result rendering -------------------------------------------------
    // Doubles are printed in shortest round-trip form ('.' decimal separator,
    // no grouping); lines end with LF. Identical inputs give identical bytes.

    std::string solve_report_to_json(const bf::SolveReport &rep);

    // Columns: sweep_variable,sweep_value,scheme,mean_rate,stderr_rate,
    // mean_interference_w,trials - one row per (sweep value x scheme).
    std::string sweep_to_csv(const sim::SweepResult &res);

    // Same cells as objects in a JSON array.
    std::string sweep_to_json(const sim::SweepResult &res);

    // Re-parses sweep_to_json output (used to check the round trip).
    sim::SweepResult sweep_from_json(const std::string &text);

    // CSV of (r, am_am, am_pm) on the closed grid r_min + k*step <= r_max.
    std::string pa_curve_csv(const PaCurveJob &job);

    const char *sweep_variable_name(sim::SweepVariable v);
}

#endif
