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

#ifndef satbeam_types_H
#define satbeam_types_H

#include <cmath>
#include <cstddef>
#include <vector>

namespace satbeam
{
    // Per-antenna beamforming weights, split into input amplitude r_i >= 0
    // (natural linear units) and phase theta_i in radians.
    struct BeamWeights
    {
        std::vector<double> amplitudes; // r_i, one per RF chain
        std::vector<double> phases;     // theta_i [rad]

        std::size_t size() const { return amplitudes.size(); }
    };

    // All dB quantities in this library are power ratios (10*log10).
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
    inline double dbw_to_watts(double dbw) { return db_to_linear(dbw); }
    inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }
    inline double watts_to_dbm(double w) { return linear_to_db(w) + 30.0; }

    // Spectral efficiency of a single link at received signal power p [W]
    // over noise power sigma2 [W].
    inline double rate_from_signal_power(double p_signal_w, double sigma2_w)
    {
        return std::log2(1.0 + p_signal_w / sigma2_w);
    }
}

#endif
