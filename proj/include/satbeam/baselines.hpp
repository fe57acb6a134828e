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

#ifndef satbeam_baselines_H
#define satbeam_baselines_H

#include <complex>
#include <span>

#include "satbeam/beamformer.hpp"
#include "satbeam/types.hpp"

namespace satbeam::baselines
{
    enum class BaselineKind
    {
        mrt_scaled,
        linear_ignorant_capped
    };

    // Maximum ratio transmission against the realized (perfect-CSIT) channel
    // h_ss, scaled by the largest constant c so that the true nonlinear PA
    // output still meets the interference bound and the input power limit.
    // The scaling is found by bisection (relative bracket width 1e-10).
    // AM/PM distortion is deliberately left uncompensated.
    BeamWeights mrt_scaled(const bf::ProblemSpec &spec,
                           std::span<const std::complex<double>> h_ss);

    // Nonlinearity-ignorant design: solves the linear-PA version of the
    // problem (output = input, channel-gain-proportional power loading under
    // the linear interference and power constraints) and passes the result
    // through the true PA unmodified. No saturation folding: at high power
    // this deliberately drives the loaded chains past saturation.
    BeamWeights linear_ignorant_capped(const bf::ProblemSpec &spec,
                                       std::span<const std::complex<double>> h_ss);
}

#endif
