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

#include "satbeam/pa.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "satbeam/errors.hpp"

namespace satbeam::pa
{
    namespace
    {
        void check_input_amplitude(double r)
        {
            if (!std::isfinite(r) || r < 0.0)
                throw std::domain_error("PA input amplitude must be finite and >= 0, got " +
                                        std::to_string(r));
        }
    }

    double SalehParams::saturation_input() const
    {
        if (!(beta > 0.0))
            throw std::invalid_argument("Saleh beta must be > 0 to define a saturation point");
        return std::sqrt(1.0 / beta);
    }

    double SalehParams::max_output() const
    {
        if (!(beta > 0.0))
            throw std::invalid_argument("Saleh beta must be > 0 to define a saturation point");
        return alpha / (2.0 * std::sqrt(beta));
    }

    void SalehParams::validate() const
    {
        if (!std::isfinite(alpha) || alpha <= 0.0)
            throw std::invalid_argument("Saleh alpha must be finite and > 0");
        if (!std::isfinite(beta) || beta <= 0.0)
            throw std::invalid_argument("Saleh beta must be finite and > 0");
        if (!std::isfinite(alpha_phi))
            throw std::invalid_argument("Saleh alpha_phi must be finite");
        if (!std::isfinite(beta_phi) || beta_phi < 0.0)
            throw std::invalid_argument("Saleh beta_phi must be finite and >= 0");
    }

    double am_am(const SalehParams &p, double r)
    {
        check_input_amplitude(r);
        return p.alpha * r / (1.0 + p.beta * r * r);
    }

    double am_pm(const SalehParams &p, double r)
    {
        check_input_amplitude(r);
        const double r2 = r * r;
        return p.alpha_phi * r2 / (1.0 + p.beta_phi * r2);
    }

    double am_am_inverse(const SalehParams &p, double zbar)
    {
        if (!std::isfinite(zbar) || zbar < 0.0)
            throw std::domain_error("PA output amplitude must be finite and >= 0, got " +
                                    std::to_string(zbar));
        const double zmax = p.max_output();
        if (zbar > zmax * (1.0 + 1e-12))
            throw InfeasibleAmplitude("output amplitude " + std::to_string(zbar) +
                                      " exceeds the PA maximum " + std::to_string(zmax));
        if (zbar > zmax)
            zbar = zmax;
        if (zbar == 0.0)
            return 0.0;

        double disc = p.alpha * p.alpha - 4.0 * p.beta * zbar * zbar;
        if (disc < 0.0)
            disc = 0.0; // round-off at the saturation endpoint
        // Rationalized form of (alpha - sqrt(disc)) / (2*beta*zbar); no
        // cancellation as zbar -> 0 and hits sqrt(1/beta) exactly at zmax.
        return 2.0 * zbar / (p.alpha + std::sqrt(disc));
    }

    std::vector<std::complex<double>> amplify(const PaBank &bank,
                                              const BeamWeights &weights,
                                              double theta0)
    {
        const std::size_t m = bank.size();
        if (weights.amplitudes.size() != m || weights.phases.size() != m)
            throw std::invalid_argument("beam weights have " +
                                        std::to_string(weights.amplitudes.size()) + "/" +
                                        std::to_string(weights.phases.size()) +
                                        " amplitude/phase entries for a PA bank of size " +
                                        std::to_string(m));
        std::vector<std::complex<double>> z(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            const double r = weights.amplitudes[i];
            const double mag = am_am(bank.params[i], r);
            const double phase = theta0 + weights.phases[i] + am_pm(bank.params[i], r);
            z[i] = std::polar(mag, phase);
        }
        return z;
    }
}
