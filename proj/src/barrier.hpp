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
// Internal log-barrier Newton engine shared by the substituted beamforming
// problem and the linear-PA baseline. Not part of the public headers.

#ifndef satbeam_barrier_H
#define satbeam_barrier_H

#include <cstddef>
#include <vector>

namespace satbeam::bf::detail
{
    // Per-coordinate piece of a separable smooth convex constraint
    // sum_i value(i, x_i) <= cap.
    class SeparableTerm
    {
    public:
        virtual ~SeparableTerm() = default;
        virtual double value(std::size_t i, double x) const = 0;
        virtual double grad(std::size_t i, double x) const = 0;
        virtual double hess(std::size_t i, double x) const = 0;
    };

    struct BarrierOptions
    {
        double mu_initial = 1.0;
        double mu_shrink = 0.2;
        // Stop once mu * n_ineq <= rel_gap * max(|c'x|, gap_floor); the left
        // side bounds the suboptimality of the central point.
        double rel_gap = 1e-9;
        double gap_floor = 1e-12;
        int max_newton_per_stage = 80;
        int max_stages = 160;
    };

    struct BarrierResult
    {
        std::vector<double> x;
        int newton_iterations = 0;
        double kkt_residual = 0.0;
        double duality_measure = 0.0;
        bool converged = false;
    };

    // maximize c'x  subject to
    //   a'x <= lin_bound,
    //   sum_i term(i, x_i) <= cap,
    //   0 <= x_i <= upper_i   (upper_i may be +infinity).
    //
    // x0 must be strictly feasible. The barrier Hessian is diagonal plus two
    // rank-one terms, so each Newton step costs O(n) via Sherman-Morrison.
    BarrierResult barrier_maximize(const std::vector<double> &c,
                                   const std::vector<double> &a, double lin_bound,
                                   const SeparableTerm &term, double cap,
                                   const std::vector<double> &upper,
                                   std::vector<double> x0,
                                   const BarrierOptions &opts = {});
}

#endif
