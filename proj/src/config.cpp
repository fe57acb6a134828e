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

#include "satbeam/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "satbeam/errors.hpp"

namespace satbeam::config
{
    namespace
    {
        using nlohmann::json;

        constexpr double kDegToRad = std::numbers::pi / 180.0;

        struct Parsed
        {
            int m = 16;
            std::uint64_t seed = 1;
            double sigma2_dbm = -107.0;
            double theta0 = 0.0;
            sim::SalehDist saleh;
            channel::ScenarioConfig channel_cfg;

            bool has_solve = false;
            double solve_power_w = 0.0;
            double solve_eps_w = 0.0;
            std::optional<std::vector<double>> l_ss;
            std::optional<std::vector<double>> l_st;
            std::optional<pa::PaBank> bank;

            bool has_sweep = false;
            sim::SweepVariable variable = sim::SweepVariable::eps_dbm;
            std::vector<double> values;
            double fixed_power_dbw = 12.0;
            double fixed_eps_dbm = -107.0;
            int trials = 200;
            int interference_samples = 16;

            PaCurveJob curve;
        };

        struct Check
        {
            std::vector<std::string> diags;

            void fail(const std::string &msg) { diags.push_back(msg); }

            // Fetches an optional numeric field; type errors are diagnosed.
            std::optional<double> num(const json &obj, const std::string &path,
                                      const char *key)
            {
                if (!obj.contains(key))
                    return std::nullopt;
                if (!obj.at(key).is_number())
                {
                    fail(path + key + " must be a number");
                    return std::nullopt;
                }
                const double v = obj.at(key).get<double>();
                if (!std::isfinite(v))
                {
                    fail(path + key + " must be finite");
                    return std::nullopt;
                }
                return v;
            }

            std::optional<std::vector<double>> num_array(const json &obj,
                                                         const std::string &path,
                                                         const char *key)
            {
                if (!obj.contains(key))
                    return std::nullopt;
                if (!obj.at(key).is_array())
                {
                    fail(path + key + " must be an array of numbers");
                    return std::nullopt;
                }
                std::vector<double> out;
                for (const auto &e : obj.at(key))
                {
                    if (!e.is_number() || !std::isfinite(e.get<double>()))
                    {
                        fail(path + key + " must contain only finite numbers");
                        return std::nullopt;
                    }
                    out.push_back(e.get<double>());
                }
                return out;
            }

            // Exactly one of <prefix>_<db_suffix> (a dB quantity) or
            // <prefix>_w (linear watts, > 0); returns the value in watts.
            std::optional<double> watts(const json &obj, const std::string &path,
                                        const std::string &prefix, const char *db_suffix,
                                        bool dbm, bool required)
            {
                const std::string db_key = prefix + "_" + db_suffix;
                const std::string w_key = prefix + "_w";
                const bool has_db = obj.contains(db_key);
                const bool has_w = obj.contains(w_key);
                if (has_db && has_w)
                {
                    fail(path + db_key + " and " + path + w_key + " are mutually exclusive");
                    return std::nullopt;
                }
                if (!has_db && !has_w)
                {
                    if (required)
                        fail(path + db_key + " (or " + w_key + ") is required");
                    return std::nullopt;
                }
                if (has_w)
                {
                    const auto v = num(obj, path, w_key.c_str());
                    if (!v)
                        return std::nullopt;
                    if (*v <= 0.0)
                    {
                        fail(path + w_key + " must be > 0");
                        return std::nullopt;
                    }
                    return *v;
                }
                const auto v = num(obj, path, db_key.c_str());
                if (!v)
                    return std::nullopt;
                return dbm ? dbm_to_watts(*v) : dbw_to_watts(*v);
            }
        };

        void parse_saleh_dist(Check &ck, const json &j, sim::SalehDist &d)
        {
            const std::string path = "saleh.";
            if (auto v = ck.num(j, path, "alpha_base"))
                d.alpha_base = *v;
            if (auto v = ck.num(j, path, "alpha_jitter"))
                d.alpha_jitter = *v;
            if (auto v = ck.num(j, path, "beta_base"))
                d.beta_base = *v;
            if (auto v = ck.num(j, path, "beta_jitter"))
                d.beta_jitter = *v;
            if (auto v = ck.num(j, path, "alpha_phi_base"))
                d.alpha_phi_base = *v;
            if (auto v = ck.num(j, path, "alpha_phi_jitter"))
                d.alpha_phi_jitter = *v;
            if (auto v = ck.num(j, path, "beta_phi_base"))
                d.beta_phi_base = *v;
            if (auto v = ck.num(j, path, "beta_phi_jitter"))
                d.beta_phi_jitter = *v;
            if (!(d.alpha_base > 0.0))
                ck.fail("saleh.alpha_base must be > 0");
            if (!(d.beta_base > 0.0))
                ck.fail("saleh.beta_base must be > 0");
            if (d.beta_phi_base < 0.0)
                ck.fail("saleh.beta_phi_base must be >= 0");
            if (d.alpha_jitter < 0.0 || d.beta_jitter < 0.0 || d.alpha_phi_jitter < 0.0 ||
                d.beta_phi_jitter < 0.0)
                ck.fail("saleh jitters must be >= 0");
        }

        void parse_channel_cfg(Check &ck, const json &j, channel::ScenarioConfig &cfg)
        {
            if (auto v = ck.num(j, "channel.", "path_loss_db"))
                cfg.path_loss_db = *v;
            if (j.contains("rain_fade"))
            {
                const json &r = j.at("rain_fade");
                if (!r.is_object() || !r.contains("kind") || !r.at("kind").is_string())
                {
                    ck.fail("channel.rain_fade must be an object with a string 'kind'");
                }
                else
                {
                    const std::string kind = r.at("kind").get<std::string>();
                    if (kind == "fixed")
                    {
                        cfg.rain.kind = channel::RainFadeConfig::Kind::fixed;
                        if (auto v = ck.num(r, "channel.rain_fade.", "xi"))
                            cfg.rain.xi = *v;
                        if (!(cfg.rain.xi > 0.0))
                            ck.fail("channel.rain_fade.xi must be > 0");
                    }
                    else if (kind == "lognormal_db")
                    {
                        cfg.rain.kind = channel::RainFadeConfig::Kind::lognormal_db;
                        if (auto v = ck.num(r, "channel.rain_fade.", "mu_db"))
                            cfg.rain.mu_db = *v;
                        if (auto v = ck.num(r, "channel.rain_fade.", "sigma_db"))
                            cfg.rain.sigma_db = *v;
                        if (cfg.rain.sigma_db < 0.0)
                            ck.fail("channel.rain_fade.sigma_db must be >= 0");
                    }
                    else
                    {
                        ck.fail("channel.rain_fade.kind must be \"fixed\" or \"lognormal_db\"");
                    }
                }
            }
            if (j.contains("beam"))
            {
                const json &b = j.at("beam");
                if (!b.is_object())
                {
                    ck.fail("channel.beam must be an object");
                    return;
                }
                if (auto v = ck.num(b, "channel.beam.", "peak_gain_db"))
                    cfg.peak_gain = db_to_linear(*v);
                if (auto v = ck.num(b, "channel.beam.", "angle_3db_deg"))
                {
                    if (*v <= 0.0 || *v >= 90.0)
                        ck.fail("channel.beam.angle_3db_deg must be in (0, 90)");
                    else
                        cfg.angle_3db_rad = *v * kDegToRad;
                }
                if (auto v = ck.num(b, "channel.beam.", "cone_deg"))
                {
                    if (*v <= 0.0 || *v > 90.0)
                        ck.fail("channel.beam.cone_deg must be in (0, 90]");
                    else
                        cfg.cone_half_angle_rad = *v * kDegToRad;
                }
            }
        }

        void parse_solve(Check &ck, const json &j, Parsed &p)
        {
            p.has_solve = true;
            if (auto v = ck.watts(j, "solve.", "power_limit", "dbw", false, true))
                p.solve_power_w = *v;
            if (auto v = ck.watts(j, "solve.", "eps", "dbm", true, true))
                p.solve_eps_w = *v;

            const auto lss = ck.num_array(j, "solve.", "l_ss");
            const auto lst = ck.num_array(j, "solve.", "l_st");
            if (lss.has_value() != lst.has_value())
                ck.fail("solve.l_ss and solve.l_st must be given together");
            if (lss && lst)
            {
                if (lss->size() != static_cast<std::size_t>(p.m))
                    ck.fail("solve.l_ss has " + std::to_string(lss->size()) +
                            " entries but m is " + std::to_string(p.m));
                if (lst->size() != static_cast<std::size_t>(p.m))
                    ck.fail("solve.l_st has " + std::to_string(lst->size()) +
                            " entries but m is " + std::to_string(p.m));
                for (double v : *lss)
                    if (v < 0.0)
                        ck.fail("solve.l_ss entries must be >= 0");
                for (double v : *lst)
                    if (v < 0.0)
                        ck.fail("solve.l_st entries must be >= 0");
                p.l_ss = lss;
                p.l_st = lst;
            }

            if (j.contains("saleh_params"))
            {
                const json &sp = j.at("saleh_params");
                if (!sp.is_object())
                {
                    ck.fail("solve.saleh_params must be an object of arrays");
                    return;
                }
                const auto alpha = ck.num_array(sp, "solve.saleh_params.", "alpha");
                const auto beta = ck.num_array(sp, "solve.saleh_params.", "beta");
                const auto alpha_phi = ck.num_array(sp, "solve.saleh_params.", "alpha_phi");
                const auto beta_phi = ck.num_array(sp, "solve.saleh_params.", "beta_phi");
                if (!alpha || !beta || !alpha_phi || !beta_phi)
                {
                    ck.fail("solve.saleh_params needs arrays alpha, beta, alpha_phi, beta_phi");
                    return;
                }
                const auto msz = static_cast<std::size_t>(p.m);
                if (alpha->size() != msz || beta->size() != msz ||
                    alpha_phi->size() != msz || beta_phi->size() != msz)
                {
                    ck.fail("solve.saleh_params arrays must all have m = " +
                            std::to_string(p.m) + " entries");
                    return;
                }
                pa::PaBank bank;
                for (std::size_t i = 0; i < msz; ++i)
                {
                    if ((*alpha)[i] <= 0.0 || (*beta)[i] <= 0.0 || (*beta_phi)[i] < 0.0)
                    {
                        ck.fail("solve.saleh_params requires alpha > 0, beta > 0, beta_phi >= 0");
                        return;
                    }
                    bank.params.push_back(
                        {(*alpha)[i], (*beta)[i], (*alpha_phi)[i], (*beta_phi)[i]});
                }
                p.bank = std::move(bank);
            }
        }

        void parse_sweep(Check &ck, const json &j, Parsed &p)
        {
            p.has_sweep = true;
            bool variable_ok = false;
            if (!j.contains("variable") || !j.at("variable").is_string())
            {
                ck.fail("sweep.variable must be \"eps_dbm\" or \"power_dbw\"");
            }
            else
            {
                const std::string v = j.at("variable").get<std::string>();
                if (v == "eps_dbm")
                {
                    p.variable = sim::SweepVariable::eps_dbm;
                    variable_ok = true;
                }
                else if (v == "power_dbw")
                {
                    p.variable = sim::SweepVariable::power_dbw;
                    variable_ok = true;
                }
                else
                {
                    ck.fail("sweep.variable must be \"eps_dbm\" or \"power_dbw\"");
                }
            }

            if (const auto vals = ck.num_array(j, "sweep.", "values"))
            {
                p.values = *vals;
                if (p.values.empty())
                    ck.fail("sweep.values must not be empty");
                for (std::size_t i = 1; i < p.values.size(); ++i)
                    if (p.values[i] <= p.values[i - 1])
                    {
                        ck.fail("sweep.values must be sorted strictly ascending");
                        break;
                    }
            }
            else
            {
                ck.fail("sweep.values is required");
            }

            if (variable_ok)
            {
                if (p.variable == sim::SweepVariable::eps_dbm)
                {
                    if (auto v = ck.watts(j, "sweep.", "power_limit", "dbw", false, true))
                        p.fixed_power_dbw = linear_to_db(*v);
                }
                else if (auto v = ck.watts(j, "sweep.", "eps", "dbm", true, true))
                {
                    p.fixed_eps_dbm = watts_to_dbm(*v);
                }
            }

            if (j.contains("trials"))
            {
                if (!j.at("trials").is_number_integer())
                    ck.fail("trials must be an integer");
                else
                    p.trials = j.at("trials").get<int>();
            }
            if (p.trials < 1)
                ck.fail("trials must be >= 1");

            if (j.contains("interference_samples"))
            {
                if (!j.at("interference_samples").is_number_integer())
                    ck.fail("sweep.interference_samples must be an integer");
                else
                    p.interference_samples = j.at("interference_samples").get<int>();
            }
            if (p.interference_samples < 1)
                ck.fail("sweep.interference_samples must be >= 1");
        }

        void parse_pa_curve(Check &ck, const json &j, PaCurveJob &job)
        {
            const std::string path = "pa_curve.";
            if (auto v = ck.num(j, path, "alpha"))
                job.params.alpha = *v;
            if (auto v = ck.num(j, path, "beta"))
                job.params.beta = *v;
            if (auto v = ck.num(j, path, "alpha_phi"))
                job.params.alpha_phi = *v;
            if (auto v = ck.num(j, path, "beta_phi"))
                job.params.beta_phi = *v;
            if (auto v = ck.num(j, path, "r_min"))
                job.r_min = *v;
            if (auto v = ck.num(j, path, "r_max"))
                job.r_max = *v;
            if (auto v = ck.num(j, path, "step"))
                job.step = *v;
            if (!(job.params.alpha > 0.0))
                ck.fail("pa_curve.alpha must be > 0");
            if (!(job.params.beta > 0.0))
                ck.fail("pa_curve.beta must be > 0");
            if (job.params.beta_phi < 0.0)
                ck.fail("pa_curve.beta_phi must be >= 0");
            if (job.r_min < 0.0)
                ck.fail("pa_curve.r_min must be >= 0");
            if (!(job.step > 0.0))
                ck.fail("pa_curve.step must be > 0");
            else if (job.r_max < job.r_min + job.step)
                ck.fail("pa_curve range must contain at least 2 sample points");
        }

        Parsed parse_document(const std::string &text, Check &ck)
        {
            Parsed p;
            json j;
            try
            {
                j = json::parse(text);
            }
            catch (const json::exception &e)
            {
                ck.fail(std::string("config is not valid JSON: ") + e.what());
                return p;
            }
            if (!j.is_object())
            {
                ck.fail("config root must be a JSON object");
                return p;
            }

            if (j.contains("m"))
            {
                if (!j.at("m").is_number_integer())
                    ck.fail("m must be an integer");
                else
                    p.m = j.at("m").get<int>();
            }
            if (p.m < 1)
                ck.fail("m must be >= 1");

            if (j.contains("seed"))
            {
                if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
                    ck.fail("seed must be a non-negative integer");
                else if (j.at("seed").is_number_integer() && j.at("seed").get<std::int64_t>() < 0)
                    ck.fail("seed must be a non-negative integer");
                else
                    p.seed = j.at("seed").get<std::uint64_t>();
            }

            if (auto v = ck.watts(j, "", "sigma2", "dbm", true, false))
                p.sigma2_dbm = watts_to_dbm(*v);
            if (auto v = ck.num(j, "", "theta0_rad"))
                p.theta0 = *v;

            if (j.contains("saleh"))
            {
                if (j.at("saleh").is_object())
                    parse_saleh_dist(ck, j.at("saleh"), p.saleh);
                else
                    ck.fail("saleh must be an object");
            }
            if (j.contains("channel"))
            {
                if (j.at("channel").is_object())
                    parse_channel_cfg(ck, j.at("channel"), p.channel_cfg);
                else
                    ck.fail("channel must be an object");
            }
            if (j.contains("solve"))
            {
                if (j.at("solve").is_object())
                    parse_solve(ck, j.at("solve"), p);
                else
                    ck.fail("solve must be an object");
            }
            if (j.contains("sweep"))
            {
                if (j.at("sweep").is_object())
                    parse_sweep(ck, j.at("sweep"), p);
                else
                    ck.fail("sweep must be an object");
            }
            if (j.contains("pa_curve"))
            {
                if (j.at("pa_curve").is_object())
                    parse_pa_curve(ck, j.at("pa_curve"), p.curve);
                else
                    ck.fail("pa_curve must be an object");
            }
            return p;
        }

        Parsed parse_or_throw(const std::string &text)
        {
            Check ck;
            Parsed p = parse_document(text, ck);
            if (!ck.diags.empty())
            {
                std::string joined;
                for (const auto &d : ck.diags)
                {
                    if (!joined.empty())
                        joined += "; ";
                    joined += d;
                }
                throw ConfigError(joined);
            }
            return p;
        }

        std::string format_double(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof(buf), v);
            return std::string(buf, res.ptr);
        }
    }

    std::vector<std::string> validate_config_text(const std::string &json_text)
    {
        Check ck;
        (void)parse_document(json_text, ck);
        return ck.diags;
    }

    bf::ProblemSpec build_problem(const std::string &json_text,
                                  std::optional<std::uint64_t> seed_override)
    {
        Parsed p = parse_or_throw(json_text);
        if (!p.has_solve)
            throw ConfigError("config has no solve section");
        if (seed_override)
            p.seed = *seed_override;

        bf::ProblemSpec spec;
        spec.power_limit_w = p.solve_power_w;
        spec.interference_eps_w = p.solve_eps_w;
        spec.noise_sigma2_w = dbm_to_watts(p.sigma2_dbm);
        spec.theta0 = p.theta0;

        // Sampled parts share the trial-0 stream of a sweep with the same seed.
        const std::uint64_t tseed = Rng::derive(p.seed, 0);
        Rng rng(tseed);
        if (p.bank)
            spec.bank = *p.bank;
        else
            spec.bank = sim::draw_saleh_bank(rng, p.m, p.saleh);
        if (p.l_ss)
        {
            spec.l_ss = *p.l_ss;
            spec.l_st = *p.l_st;
        }
        else
        {
            const channel::Scenario scen =
                channel::sample_scenario(rng, tseed, p.m, p.channel_cfg);
            spec.l_ss = channel::collapse(scen.sat_ut);
            spec.l_st = channel::collapse(scen.terr_ut);
        }
        spec.validate();
        return spec;
    }

    sim::ExperimentConfig build_experiment(const std::string &json_text,
                                           std::optional<std::uint64_t> seed_override)
    {
        Parsed p = parse_or_throw(json_text);
        if (!p.has_sweep)
            throw ConfigError("config has no sweep section");

        sim::ExperimentConfig cfg;
        cfg.m = p.m;
        cfg.trials = p.trials;
        cfg.variable = p.variable;
        cfg.values = p.values;
        cfg.fixed_power_dbw = p.fixed_power_dbw;
        cfg.fixed_eps_dbm = p.fixed_eps_dbm;
        cfg.sigma2_dbm = p.sigma2_dbm;
        cfg.theta0 = p.theta0;
        cfg.saleh = p.saleh;
        cfg.channel_cfg = p.channel_cfg;
        cfg.seed = seed_override ? *seed_override : p.seed;
        cfg.interference_samples = p.interference_samples;
        cfg.validate();
        return cfg;
    }

    PaCurveJob build_pa_curve(const std::string &json_text)
    {
        if (json_text.empty())
            return PaCurveJob{};
        return parse_or_throw(json_text).curve;
    }

    std::string solve_report_to_json(const bf::SolveReport &rep)
    {
        const nlohmann::json j = {{"status", bf::to_string(rep.status)},
                                  {"objective", rep.objective},
                                  {"rate_bps_hz", rep.rate_bps_hz},
                                  {"kkt_residual", rep.kkt_residual},
                                  {"iterations", rep.iterations},
                                  {"amplitudes", rep.weights.amplitudes},
                                  {"phases", rep.weights.phases},
                                  {"zbar", rep.zbar_star.zbar}};
        return j.dump(2) + "\n";
    }

    const char *sweep_variable_name(sim::SweepVariable v)
    {
        return v == sim::SweepVariable::eps_dbm ? "eps_dbm" : "power_dbw";
    }

    std::string sweep_to_csv(const sim::SweepResult &res)
    {
        std::string out =
            "sweep_variable,sweep_value,scheme,mean_rate,stderr_rate,mean_interference_w,trials\n";
        const char *var = sweep_variable_name(res.variable);
        for (const auto &cell : res.cells)
        {
            out += var;
            out += ',';
            out += format_double(cell.sweep_value);
            out += ',';
            out += sim::kSchemeNames[static_cast<int>(cell.scheme)];
            out += ',';
            out += format_double(cell.mean_rate);
            out += ',';
            out += format_double(cell.stderr_rate);
            out += ',';
            out += format_double(cell.mean_interference_w);
            out += ',';
            out += std::to_string(cell.trials);
            out += '\n';
        }
        return out;
    }

    std::string sweep_to_json(const sim::SweepResult &res)
    {
        nlohmann::json arr = nlohmann::json::array();
        const char *var = sweep_variable_name(res.variable);
        for (const auto &cell : res.cells)
        {
            arr.push_back({{"sweep_variable", var},
                           {"sweep_value", cell.sweep_value},
                           {"scheme", sim::kSchemeNames[static_cast<int>(cell.scheme)]},
                           {"mean_rate", cell.mean_rate},
                           {"stderr_rate", cell.stderr_rate},
                           {"mean_interference_w", cell.mean_interference_w},
                           {"trials", cell.trials}});
        }
        return arr.dump(2) + "\n";
    }

    sim::SweepResult sweep_from_json(const std::string &text)
    {
        nlohmann::json arr;
        try
        {
            arr = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError(std::string("sweep JSON parse error: ") + e.what());
        }
        if (!arr.is_array() || arr.empty())
            throw ConfigError("sweep JSON must be a non-empty array");

        sim::SweepResult res;
        const std::string var = arr.front().at("sweep_variable").get<std::string>();
        res.variable = var == "power_dbw" ? sim::SweepVariable::power_dbw
                                          : sim::SweepVariable::eps_dbm;
        for (const auto &j : arr)
        {
            sim::SweepCell cell;
            cell.sweep_value = j.at("sweep_value").get<double>();
            const std::string scheme = j.at("scheme").get<std::string>();
            int si = 0;
            for (int k = 0; k < 3; ++k)
                if (scheme == sim::kSchemeNames[k])
                    si = k;
            cell.scheme = static_cast<sim::Scheme>(si);
            cell.mean_rate = j.at("mean_rate").get<double>();
            cell.stderr_rate = j.at("stderr_rate").get<double>();
            cell.mean_interference_w = j.at("mean_interference_w").get<double>();
            cell.trials = j.at("trials").get<int>();
            res.cells.push_back(cell);
        }
        return res;
    }

    std::string pa_curve_csv(const PaCurveJob &job)
    {
        const auto n = static_cast<long>((job.r_max - job.r_min) / job.step + 1e-9) + 1;
        if (n < 2)
            throw ConfigError("pa_curve range must contain at least 2 sample points");
        std::string out = "r,am_am,am_pm\n";
        for (long k = 0; k < n; ++k)
        {
            const double r = job.r_min + static_cast<double>(k) * job.step;
            out += format_double(r);
            out += ',';
            out += format_double(pa::am_am(job.params, r));
            out += ',';
            out += format_double(pa::am_pm(job.params, r));
            out += '\n';
        }
        return out;
    }
}
