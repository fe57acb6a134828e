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

#ifndef satbeam_rng_H
#define satbeam_rng_H

#include <cstdint>
#include <random>

namespace satbeam
{
    // Seeded generator for reproducible Monte Carlo runs. Uniform doubles are
    // produced from the raw 64-bit engine output (53 high bits), so a given
    // seed yields the same stream on every platform; the standard
    // distribution adaptors are avoided because their output is
    // implementation-defined.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next_u64() { return engine_(); }

        // Uniform in [0, 1).
        double uniform()
        {
            return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        }

        double uniform(double a, double b) { return a + (b - a) * uniform(); }

        // Independent child stream id for a given base seed; splitmix64 mix
        // so adjacent stream indices are decorrelated.
        static std::uint64_t derive(std::uint64_t base, std::uint64_t stream)
        {
            std::uint64_t z = base + (stream + 1) * 0x9E3779B97F4A7C15ull;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return z ^ (z >> 31);
        }

    private:
        std::mt19937_64 engine_;
    };
}

#endif
