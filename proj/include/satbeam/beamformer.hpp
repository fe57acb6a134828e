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

#ifndef satbeam_beamformer_H
#define satbeam_beamformer_H

#include <span>
#include <vector>

#include "satbeam/pa.hpp"
#include "satbeam/types.hpp"

namespace satbeam::bf
{
    // One instance of the rate-maximization problem: maximize the satellite
    // link rate over beam amplitudes and phases, subject to the received
    // interference power at the terrestrial UT staying below eps and the
    // summed squared input amplitudes staying below the power limit.
    struct ProblemSpec
    {
        std::vector<double> l_ss; // large-scale gain vector, satellite -> satellite UT
        std::vector<double> l_st; // large-scale gain vector, satellite -> terrestrial UT
        pa::PaBank bank;          // one Saleh parameter set per RF chain
        double power_limit_w;     // sum of squared input amplitudes [W]
        double interference_eps_w;
        double noise_sigma2_w;
        double theta0;            // transmitted symbol phase [rad]

        std::size_t size() const { return l_ss.size(); }
        void validate() const; // throws ConfigError naming the offending field
    };

    enum class SolveStatus
    {
        optimal,
        max_iterations,
        infeasible_input
    };

    const char *to_string(SolveStatus s);

    // PA output amplitudes, the variable of the substituted convex program.
    // Feasible box: 0 <= zbar_i <= alpha_i / (2*sqrt(beta_i)).
    struct SubstitutedPoint
    {
        std::vector<double> zbar;
    };

    struct SolveReport
    {
        BeamWeights weights;
        SubstitutedPoint zbar_star;
        double objective;    // l_ss' zbar*
        double rate_bps_hz;  // log2(1 + objective^2 / sigma^2)
        double kkt_residual; // scaled first-order residual at the solution
        int iterations;      // Newton iterations spent
        SolveStatus status;
    };

    // Input-power constraint in terms of output amplitudes:
    //   f(zbar) = sum_i nu_i(zbar_i)^2 - P
    // with nu_i the monotone-region AM/AM inverse. f <= 0 iff the implied
    // input power is feasible.
    double power_constraint_f(const pa::PaBank &bank, const SubstitutedPoint &zbar,
                              double power_limit_w);

    // d f / d zbar_i = 2 nu (1 + beta nu^2)^2 / (alpha (1 - beta nu^2)).
    // Unbounded at the saturation endpoint; endpoint input throws.
    std::vector<double> power_constraint_gradient(const pa::PaBank &bank,
                                                  const SubstitutedPoint &zbar);

    // Diagonal of the Hessian of f; cross-partials vanish by separability.
    // Strictly positive on the interior of the box, so f is convex there.
    std::vector<double> power_constraint_hessian_diag(const pa::PaBank &bank,
                                                      const SubstitutedPoint &zbar);

    struct SubstitutedSolution
    {
        SubstitutedPoint point;
        int newton_iterations;
        double kkt_residual;
        SolveStatus status;
    };

    // Solves the substituted convex program
    //   max l_ss' zbar  s.t.  l_st' zbar <= sqrt(eps),  f(zbar) <= 0,  box,
    // with a primal log-barrier interior-point method using the analytic
    // gradient/Hessian of f (diagonal plus two rank-one Newton systems).
    SubstitutedSolution solve_substituted(const ProblemSpec &spec);

    // Elementwise monotone-region AM/AM inverse of the optimal outputs.
    std::vector<double> recover_amplitudes(const pa::PaBank &bank,
                                           const SubstitutedPoint &zbar);

    // Phases that cancel the carrier phase and each chain's AM/PM distortion,
    // so every PA output component lands at phase 0 (mod 2*pi).
    std::vector<double> recover_phases(const pa::PaBank &bank,
                                       std::span<const double> amplitudes,
                                       double theta0);

    // Replaces over-saturated entries r_k > sqrt(1/beta_k) by the smaller
    // input with the same AM/AM output; entries already below saturation pass
    // through unchanged. Output amplitudes are preserved, input power shrinks.
    std::vector<double> fold_to_monotone_region(const pa::PaBank &bank,
                                                std::span<const double> amplitudes);

    // Full pipeline: solve_substituted, recover amplitudes and phases,
    // evaluate the achieved rate.
    SolveReport solve(const ProblemSpec &spec);
}

#endif
