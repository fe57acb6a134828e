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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "satbeam/errors.hpp"
#include "satbeam/pa.hpp"
#include "satbeam/rng.hpp"

using Catch::Approx;
using namespace satbeam;

namespace
{
    // Reference AM/AM written out independently of the library.
    double am_am_ref(double alpha, double beta, double r)
    {
        return alpha * r / (1.0 + beta * r * r);
    }

    // Brute-force root of am_am_ref(r) = z on [lo, hi] by bisection.
    double invert_by_bisection(double alpha, double beta, double z, double lo, double hi)
    {
        for (int i = 0; i < 200; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            (am_am_ref(alpha, beta, mid) < z ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
}

TEST_CASE("am_am evaluates the Saleh AM/AM ratio")
{
    const pa::SalehParams unit{1.0, 1.0, 0.0, 0.0};
    CHECK(pa::am_am(unit, 0.0) == 0.0);

    // §IV-style coefficients at the saturation input: output is alpha/(2*sqrt(beta)).
    const pa::SalehParams p{0.9445, 0.5138, 4.0033, 9.1040};
    const double r_sat = std::sqrt(1.0 / 0.5138);
    const double expected_peak = 0.9445 / (2.0 * std::sqrt(0.5138));
    CHECK(pa::am_am(p, r_sat) == Approx(expected_peak).epsilon(1e-14));
    CHECK(pa::am_am(p, r_sat) == Approx(0.6588323513206905).epsilon(1e-12));

    // beyond saturation the output decreases
    CHECK(pa::am_am(unit, 2.0) == Approx(0.4).epsilon(1e-15));
    CHECK(pa::am_am(unit, 2.0) < pa::am_am(unit, 1.0));

    CHECK_THROWS_AS(pa::am_am(unit, -0.1), std::domain_error);
    CHECK_THROWS_AS(pa::am_am(unit, std::nan("")), std::domain_error);
}

TEST_CASE("am_pm evaluates the Saleh AM/PM ratio")
{
    const pa::SalehParams p{1.0, 1.0, 4.0033, 9.1040};
    CHECK(pa::am_pm(p, 0.0) == 0.0);
    CHECK(pa::am_pm(p, 1.0) == Approx(4.0033 / 10.1040).epsilon(1e-14));
    CHECK(pa::am_pm(p, 1.0) == Approx(0.3962094220110847).epsilon(1e-12));

    const pa::SalehParams degenerate{1.0, 1.0, 4.0, 0.0};
    CHECK(pa::am_pm(degenerate, 2.0) == Approx(16.0).epsilon(1e-15));

    CHECK_THROWS_AS(pa::am_pm(p, -1.0), std::domain_error);
}

TEST_CASE("saturation_input marks the AM/AM peak")
{
    CHECK(pa::SalehParams{1.0, 1.0, 0.0, 0.0}.saturation_input() == Approx(1.0));
    CHECK(pa::SalehParams{1.0, 0.5138, 0.0, 0.0}.saturation_input() ==
          Approx(std::sqrt(1.0 / 0.5138)).epsilon(1e-15));
    CHECK(pa::SalehParams{1.0, 4.0, 0.0, 0.0}.saturation_input() == Approx(0.5));
    CHECK_THROWS_AS((pa::SalehParams{1.0, 0.0, 0.0, 0.0}.saturation_input()),
                    std::invalid_argument);
    CHECK_THROWS_AS((pa::SalehParams{1.0, -1.0, 0.0, 0.0}.saturation_input()),
                    std::invalid_argument);
}

TEST_CASE("am_am is increasing below saturation and decreasing above it")
{
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial)
    {
        const pa::SalehParams p{rng.uniform(0.2, 3.0), rng.uniform(0.05, 5.0), 0.0, 0.0};
        const double r_sat = p.saturation_input();
        double prev = 0.0;
        for (int k = 1; k <= 40; ++k)
        {
            const double v = pa::am_am(p, r_sat * k / 40.0);
            CHECK(v > prev);
            prev = v;
        }
        for (int k = 1; k <= 40; ++k)
        {
            const double v = pa::am_am(p, r_sat * (1.0 + 2.0 * k / 40.0));
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("am_am_inverse returns the monotone-region preimage")
{
    const pa::SalehParams unit{1.0, 1.0, 0.0, 0.0};
    CHECK(pa::am_am_inverse(unit, 0.0) == 0.0);

    // away from the flat maximum the bisection oracle is sharp
    const double root04 = invert_by_bisection(1.0, 1.0, 0.4, 0.0, 1.0);
    CHECK(pa::am_am_inverse(unit, 0.4) == Approx(root04).epsilon(1e-12));

    // at zbar = zmax = 0.5 the curve is quadratically flat, so bisection can
    // only pin the root to ~sqrt(eps); the closed form is exact there
    const double root05 = invert_by_bisection(1.0, 1.0, 0.5, 0.0, 1.0);
    CHECK(pa::am_am_inverse(unit, 0.5) == Approx(root05).epsilon(1e-7));
    CHECK(pa::am_am_inverse(unit, 0.5) == Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(pa::am_am_inverse(unit, -1e-9), std::domain_error);
    CHECK_THROWS_AS(pa::am_am_inverse(unit, 0.5 * (1.0 + 1e-9)), InfeasibleAmplitude);
    // within the clamp tolerance: accepted
    CHECK(pa::am_am_inverse(unit, 0.5 * (1.0 + 1e-13)) == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("am_am_inverse round trip over random parameters")
{
    Rng rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 5000; ++trial)
    {
        const pa::SalehParams p{0.9445 + 0.1 * rng.uniform(), 0.5138 + 0.1 * rng.uniform(),
                                0.0, 0.0};
        const double r = rng.uniform() * p.saturation_input();
        const double back = pa::am_am_inverse(p, pa::am_am(p, r));
        worst = std::max(worst, std::abs(back - r));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("folding an over-saturated amplitude preserves the output")
{
    Rng rng(77);
    for (int trial = 0; trial < 2000; ++trial)
    {
        const pa::SalehParams p{rng.uniform(0.2, 3.0), rng.uniform(0.05, 5.0), 0.0, 0.0};
        const double r_sat = p.saturation_input();
        const double r = r_sat * rng.uniform(1.0 + 1e-6, 4.0);
        const double folded = pa::am_am_inverse(p, pa::am_am(p, r));
        CHECK(folded <= r_sat * (1.0 + 1e-12));
        CHECK(folded < r);
        CHECK(pa::am_am(p, folded) == Approx(pa::am_am(p, r)).epsilon(1e-12));
    }
}

TEST_CASE("amplify applies AM/AM magnitude and AM/PM phase per chain")
{
    SECTION("zero input")
    {
        pa::PaBank bank{{{1.0, 1.0, 0.0, 1.0}}};
        const auto z = pa::amplify(bank, {{0.0}, {0.0}}, 0.0);
        REQUIRE(z.size() == 1);
        CHECK(std::abs(z[0]) == 0.0);
    }

    SECTION("unit input, no phase distortion")
    {
        pa::PaBank bank{{{1.0, 1.0, 0.0, 1.0}}};
        const auto z = pa::amplify(bank, {{1.0}, {0.0}}, 0.0);
        CHECK(z[0].real() == Approx(0.5).epsilon(1e-15));
        CHECK(z[0].imag() == Approx(0.0).margin(1e-15));
    }

    SECTION("opposite phases stay opposite through identical PAs")
    {
        pa::PaBank bank{{{1.0, 1.0, 0.3, 0.7}, {1.0, 1.0, 0.3, 0.7}}};
        const auto z = pa::amplify(bank, {{1.0, 1.0}, {0.0, std::numbers::pi}}, 0.0);
        CHECK(std::abs(z[0]) == Approx(std::abs(z[1])).epsilon(1e-14));
        CHECK((z[0] + z[1]).real() == Approx(0.0).margin(1e-14));
        CHECK((z[0] + z[1]).imag() == Approx(0.0).margin(1e-14));
    }

    SECTION("magnitude/phase decomposition on random draws")
    {
        Rng rng(5150);
        for (int trial = 0; trial < 200; ++trial)
        {
            pa::PaBank bank;
            BeamWeights w;
            const int m = 1 + static_cast<int>(rng.uniform() * 6);
            for (int i = 0; i < m; ++i)
            {
                bank.params.push_back({0.9445 + 0.1 * rng.uniform(),
                                       0.5138 + 0.1 * rng.uniform(),
                                       4.0033 + rng.uniform(), 9.1040 + rng.uniform()});
                w.amplitudes.push_back(rng.uniform(0.0, 2.0));
                w.phases.push_back(rng.uniform(-8.0, 8.0));
            }
            const double theta0 = rng.uniform(-3.0, 3.0);
            const auto z = pa::amplify(bank, w, theta0);
            for (int i = 0; i < m; ++i)
            {
                CHECK(std::abs(z[i]) ==
                      Approx(pa::am_am(bank.params[i], w.amplitudes[i])).margin(1e-12));
                const double want =
                    theta0 + w.phases[i] + pa::am_pm(bank.params[i], w.amplitudes[i]);
                const double got = std::arg(z[i]);
                const double diff = std::remainder(got - want, 2.0 * std::numbers::pi);
                CHECK(std::abs(diff) < 1e-12);
            }
        }
    }

    SECTION("length mismatch is rejected")
    {
        pa::PaBank bank{{{1.0, 1.0, 0.0, 1.0}}};
        CHECK_THROWS_AS(pa::amplify(bank, {{1.0, 2.0}, {0.0, 0.0}}, 0.0),
                        std::invalid_argument);
    }
}
