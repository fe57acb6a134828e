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

#ifndef satbeam_pa_H
#define satbeam_pa_H

#include <complex>
#include <cstddef>
#include <vector>

#include "satbeam/types.hpp"

namespace satbeam::pa
{
    // Saleh model coefficients of one RF chain. AM/AM maps input amplitude r
    // to output amplitude alpha*r / (1 + beta*r^2); AM/PM maps r to a phase
    // offset alpha_phi*r^2 / (1 + beta_phi*r^2) in radians.
    //
    // All amplitudes are natural linear units; no dB anywhere in this module.
    struct SalehParams
    {
        double alpha;     // AM/AM numerator coefficient, > 0
        double beta;      // AM/AM denominator coefficient [1/amplitude^2], > 0
        double alpha_phi; // AM/PM numerator coefficient [rad/amplitude^2], any sign
        double beta_phi;  // AM/PM denominator coefficient [1/amplitude^2], >= 0

        // Input amplitude sqrt(1/beta) at which the AM/AM output peaks;
        // the output amplitude decreases beyond it.
        double saturation_input() const;

        // Peak output amplitude alpha / (2*sqrt(beta)), reached at the
        // saturation input.
        double max_output() const;

        void validate() const; // throws std::invalid_argument
    };

    // One SalehParams per RF chain; different chains generally differ.
    struct PaBank
    {
        std::vector<SalehParams> params;

        std::size_t size() const { return params.size(); }
    };

    // AM/AM output amplitude for input amplitude r >= 0.
    double am_am(const SalehParams &p, double r);

    // AM/PM phase distortion [rad] for input amplitude r >= 0.
    double am_pm(const SalehParams &p, double r);

    // Unique preimage of an output amplitude zbar in [0, max_output()] on the
    // monotone region [0, saturation_input()]. Values up to a 1e-12 relative
    // overshoot of max_output() are clamped; larger ones throw
    // InfeasibleAmplitude.
    double am_am_inverse(const SalehParams &p, double zbar);

    // PA output vector for beamformed inputs: component i has magnitude
    // am_am(r_i) and phase theta0 + theta_i + am_pm(r_i).
    std::vector<std::complex<double>> amplify(const PaBank &bank,
                                              const BeamWeights &weights,
                                              double theta0);
}

#endif
