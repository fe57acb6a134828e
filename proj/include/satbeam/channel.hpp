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

#ifndef satbeam_channel_H
#define satbeam_channel_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "satbeam/rng.hpp"

namespace satbeam::channel
{
    // Large-scale part of one composite multi-beam satellite link: free-space
    // path loss, rain-fade attenuation, and per-antenna beam gains, all as
    // linear power quantities. The small-scale feed phase lives separately.
    struct LargeScaleChannel
    {
        double path_loss_g;             // linear power gain, > 0
        double rain_fade_xi;            // linear power attenuation, > 0
        std::vector<double> beam_gains; // per-antenna linear power gains, >= 0

        void validate() const; // throws std::invalid_argument
    };

    // Fast-varying feed phase, uniform in [0, 2*pi) when drawn.
    struct SmallScalePhase
    {
        double phi;
    };

    // Inputs to the beam-gain pattern for one UT location.
    struct UtGeometry
    {
        std::vector<double> off_axis_rad; // angle beam boresight <-> UT, >= 0, one per beam
        double angle_3db_rad;             // one-sided 3 dB beamwidth, > 0
        double peak_gain;                 // linear power gain at boresight, > 0

        void validate() const;
    };

    // Tapered-aperture multi-beam pattern
    //   b(phi) = peak_gain * (J1(u)/(2u) + 36*J3(u)/u^3)^2,
    //   u = 2.07123 * sin(phi) / sin(angle_3db),
    // which is 1 at boresight and 0.5 at the 3 dB angle by construction.
    std::vector<double> beam_gain_pattern(const UtGeometry &geom);

    // Collapsed large-scale gain vector l_i = sqrt(g * xi * b_i).
    std::vector<double> collapse(const LargeScaleChannel &ch);

    // Complex channel vector h_i = l_i * exp(-j*phi).
    std::vector<std::complex<double>> realize(const LargeScaleChannel &ch,
                                              SmallScalePhase phase);

    struct RainFadeConfig
    {
        enum class Kind
        {
            fixed,       // xi constant
            lognormal_db // attenuation A [dB] ~ Lognormal(mu, sigma), xi = 10^(-A/10)
        };
        Kind kind = Kind::fixed;
        double xi = 1.0;       // fixed value
        double mu_db = 0.0;    // log-mean of A [dB]
        double sigma_db = 0.0; // log-std of A [dB]
    };

    struct ScenarioConfig
    {
        double path_loss_db = -210.0; // applied to both links
        RainFadeConfig rain;
        double peak_gain = 5.0e7;          // linear, ~77 dB combined beam + UT gain
        double angle_3db_rad = 0.007;      // ~0.4 deg
        double cone_half_angle_rad = 0.014; // UT off-axis angles drawn in [0, cone]

        void validate() const; // throws ConfigError
    };

    // One drawn spectrum-sharing scene: the satellite->satellite-UT link and
    // the satellite->terrestrial-UT interfering link.
    struct Scenario
    {
        std::uint64_t seed;
        LargeScaleChannel sat_ut;  // s -> s
        LargeScaleChannel terr_ut; // s -> t
    };

    Scenario sample_scenario(std::uint64_t seed, int m, const ScenarioConfig &cfg);
    Scenario sample_scenario(Rng &rng, std::uint64_t seed, int m, const ScenarioConfig &cfg);

    // JSON document with fields seed, s_to_s{g_db, xi, beam_gains[]},
    // s_to_t{...}; round-trips through scenario_from_json.
    std::string scenario_to_json(const Scenario &sc);
    Scenario scenario_from_json(const std::string &text);
}

#endif
