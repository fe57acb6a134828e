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

#include "satbeam/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "satbeam/errors.hpp"
#include "satbeam/types.hpp"

namespace satbeam::channel
{
    namespace
    {
        constexpr double k3db = 2.07123; // places the half-power point at angle_3db

        double pattern_bracket(double u)
        {
            // J1(u)/(2u) + 36*J3(u)/u^3 -> 1 as u -> 0; series limit below the
            // point where the direct quotients lose accuracy.
            if (u < 1e-4)
                return 1.0 - 0.078125 * u * u;
            return std::cyl_bessel_j(1, u) / (2.0 * u) +
                   36.0 * std::cyl_bessel_j(3, u) / (u * u * u);
        }

        double draw_rain_fade(Rng &rng, const RainFadeConfig &rain)
        {
            if (rain.kind == RainFadeConfig::Kind::fixed)
                return rain.xi;
            // Box-Muller on raw uniforms keeps the stream platform-independent.
            double u1 = rng.uniform();
            const double u2 = rng.uniform();
            if (u1 < 1e-300)
                u1 = 1e-300;
            const double n = std::sqrt(-2.0 * std::log(u1)) *
                             std::cos(2.0 * std::numbers::pi * u2);
            const double atten_db = std::exp(rain.mu_db + rain.sigma_db * n);
            return std::pow(10.0, -atten_db / 10.0);
        }

        LargeScaleChannel draw_link(Rng &rng, int m, const ScenarioConfig &cfg)
        {
            UtGeometry geom;
            geom.off_axis_rad.resize(static_cast<std::size_t>(m));
            for (auto &a : geom.off_axis_rad)
                a = rng.uniform(0.0, cfg.cone_half_angle_rad);
            geom.angle_3db_rad = cfg.angle_3db_rad;
            geom.peak_gain = cfg.peak_gain;

            LargeScaleChannel ch;
            ch.path_loss_g = db_to_linear(cfg.path_loss_db);
            ch.rain_fade_xi = draw_rain_fade(rng, cfg.rain);
            ch.beam_gains = beam_gain_pattern(geom);
            return ch;
        }
    }

    void LargeScaleChannel::validate() const
    {
        if (!std::isfinite(path_loss_g) || path_loss_g <= 0.0)
            throw std::invalid_argument("channel path loss gain must be finite and > 0");
        if (!std::isfinite(rain_fade_xi) || rain_fade_xi <= 0.0)
            throw std::invalid_argument("channel rain fade must be finite and > 0");
        for (double b : beam_gains)
            if (!std::isfinite(b) || b < 0.0)
                throw std::invalid_argument("channel beam gains must be finite and >= 0");
    }

    void UtGeometry::validate() const
    {
        if (!(angle_3db_rad > 0.0))
            throw std::invalid_argument("3 dB beamwidth must be > 0");
        if (!(peak_gain > 0.0))
            throw std::invalid_argument("peak beam gain must be > 0");
        for (double a : off_axis_rad)
            if (!std::isfinite(a) || a < 0.0)
                throw std::invalid_argument("off-axis angles must be finite and >= 0");
    }

    std::vector<double> beam_gain_pattern(const UtGeometry &geom)
    {
        geom.validate();
        std::vector<double> gains(geom.off_axis_rad.size());
        const double sin3db = std::sin(geom.angle_3db_rad);
        for (std::size_t i = 0; i < gains.size(); ++i)
        {
            const double u = k3db * std::abs(std::sin(geom.off_axis_rad[i])) / sin3db;
            const double br = pattern_bracket(u);
            gains[i] = geom.peak_gain * br * br;
        }
        return gains;
    }

    std::vector<double> collapse(const LargeScaleChannel &ch)
    {
        ch.validate();
        std::vector<double> l(ch.beam_gains.size());
        for (std::size_t i = 0; i < l.size(); ++i)
            l[i] = std::sqrt(ch.path_loss_g * ch.rain_fade_xi * ch.beam_gains[i]);
        return l;
    }

    std::vector<std::complex<double>> realize(const LargeScaleChannel &ch,
                                              SmallScalePhase phase)
    {
        const std::vector<double> l = collapse(ch);
        std::vector<std::complex<double>> h(l.size());
        const std::complex<double> rot = std::polar(1.0, -phase.phi);
        for (std::size_t i = 0; i < l.size(); ++i)
            h[i] = l[i] * rot;
        return h;
    }

    void ScenarioConfig::validate() const
    {
        if (!std::isfinite(path_loss_db))
            throw ConfigError("channel.path_loss_db must be finite");
        if (!(peak_gain > 0.0) || !std::isfinite(peak_gain))
            throw ConfigError("channel.beam peak gain must be finite and > 0");
        if (!(angle_3db_rad > 0.0) || angle_3db_rad >= std::numbers::pi / 2)
            throw ConfigError("channel.beam 3 dB angle must be in (0, pi/2)");
        if (!(cone_half_angle_rad > 0.0) || cone_half_angle_rad > std::numbers::pi / 2)
            throw ConfigError("channel.beam cone half-angle must be in (0, pi/2]");
        if (rain.kind == RainFadeConfig::Kind::fixed)
        {
            if (!(rain.xi > 0.0) || !std::isfinite(rain.xi))
                throw ConfigError("channel.rain_fade xi must be finite and > 0");
        }
        else if (!(rain.sigma_db >= 0.0) || !std::isfinite(rain.mu_db) ||
                 !std::isfinite(rain.sigma_db))
        {
            throw ConfigError("channel.rain_fade lognormal parameters must be finite, sigma >= 0");
        }
    }

    Scenario sample_scenario(Rng &rng, std::uint64_t seed, int m, const ScenarioConfig &cfg)
    {
        if (m < 1)
            throw ConfigError("antenna count m must be >= 1");
        cfg.validate();
        Scenario sc;
        sc.seed = seed;
        sc.sat_ut = draw_link(rng, m, cfg);
        sc.terr_ut = draw_link(rng, m, cfg);
        return sc;
    }

    Scenario sample_scenario(std::uint64_t seed, int m, const ScenarioConfig &cfg)
    {
        Rng rng(seed);
        return sample_scenario(rng, seed, m, cfg);
    }

    namespace
    {
        nlohmann::json link_to_json(const LargeScaleChannel &ch)
        {
            return {{"g_db", linear_to_db(ch.path_loss_g)},
                    {"xi", ch.rain_fade_xi},
                    {"beam_gains", ch.beam_gains}};
        }

        LargeScaleChannel link_from_json(const nlohmann::json &j)
        {
            LargeScaleChannel ch;
            ch.path_loss_g = db_to_linear(j.at("g_db").get<double>());
            ch.rain_fade_xi = j.at("xi").get<double>();
            ch.beam_gains = j.at("beam_gains").get<std::vector<double>>();
            ch.validate();
            return ch;
        }
    }

    std::string scenario_to_json(const Scenario &sc)
    {
        const nlohmann::json j = {{"seed", sc.seed},
                                  {"s_to_s", link_to_json(sc.sat_ut)},
                                  {"s_to_t", link_to_json(sc.terr_ut)}};
        return j.dump(2);
    }

    Scenario scenario_from_json(const std::string &text)
    {
        nlohmann::json j;
        try
        {
            j = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError(std::string("scenario JSON parse error: ") + e.what());
        }
        try
        {
            Scenario sc;
            sc.seed = j.at("seed").get<std::uint64_t>();
            sc.sat_ut = link_from_json(j.at("s_to_s"));
            sc.terr_ut = link_from_json(j.at("s_to_t"));
            return sc;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError(std::string("scenario JSON schema error: ") + e.what());
        }
    }
}
