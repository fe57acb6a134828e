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

#ifndef satbeam_errors_H
#define satbeam_errors_H

#include <stdexcept>
#include <string>

namespace satbeam
{
    // Invalid or inconsistent configuration input (bad units, ranges, lengths).
    // The CLI maps this to exit code 2.
    struct ConfigError : std::runtime_error
    {
        explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
    };

    // A requested PA output amplitude exceeds the physically reachable maximum.
    struct InfeasibleAmplitude : std::domain_error
    {
        explicit InfeasibleAmplitude(const std::string &msg) : std::domain_error(msg) {}
    };
}

#endif
