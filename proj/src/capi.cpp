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

#include "satbeam/satbeam.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "satbeam/beamformer.hpp"
#include "satbeam/config.hpp"
#include "satbeam/errors.hpp"
#include "satbeam/sim.hpp"

struct satbeam_problem
{
    satbeam::bf::ProblemSpec spec;
};

struct satbeam_report
{
    satbeam::bf::SolveReport rep;
};

namespace
{
    thread_local std::string g_last_error;

    void set_error(const std::string &msg) { g_last_error = msg; }

    char *dup_string(const std::string &s)
    {
        char *out = static_cast<char *>(std::malloc(s.size() + 1));
        if (out != nullptr)
            std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    // Runs fn, translating exceptions into status codes + last_error.
    template <typename Fn>
    satbeam_status guarded(Fn &&fn)
    {
        try
        {
            return fn();
        }
        catch (const satbeam::ConfigError &e)
        {
            set_error(e.what());
            return SATBEAM_ERR_CONFIG;
        }
        catch (const std::invalid_argument &e)
        {
            set_error(e.what());
            return SATBEAM_ERR_INVALID_ARGUMENT;
        }
        catch (const std::domain_error &e)
        {
            set_error(e.what());
            return SATBEAM_ERR_INVALID_ARGUMENT;
        }
        catch (const std::exception &e)
        {
            set_error(e.what());
            return SATBEAM_ERR_INTERNAL;
        }
        catch (...)
        {
            set_error("unknown internal error");
            return SATBEAM_ERR_INTERNAL;
        }
    }

    satbeam_status copy_vector(const std::vector<double> &v, double *out, int len)
    {
        if (out == nullptr || len < static_cast<int>(v.size()))
        {
            set_error("output buffer is null or too small");
            return SATBEAM_ERR_INVALID_ARGUMENT;
        }
        std::memcpy(out, v.data(), v.size() * sizeof(double));
        return SATBEAM_OK;
    }

    std::optional<std::uint64_t> opt_seed(const uint64_t *seed_override)
    {
        if (seed_override == nullptr)
            return std::nullopt;
        return *seed_override;
    }
}

extern "C"
{
    const char *satbeam_version(void) { return "0.1.0"; }

    const char *satbeam_last_error(void) { return g_last_error.c_str(); }

    void satbeam_string_free(char *s) { std::free(s); }

    satbeam_status satbeam_problem_create(int m, const double *l_ss, const double *l_st,
                                          const double *alpha, const double *beta,
                                          const double *alpha_phi, const double *beta_phi,
                                          double power_limit_w, double interference_eps_w,
                                          double noise_sigma2_w, double theta0_rad,
                                          satbeam_problem **out)
    {
        return guarded([&]() -> satbeam_status
        {
            if (out == nullptr || m < 1 || l_ss == nullptr || l_st == nullptr ||
                alpha == nullptr || beta == nullptr || alpha_phi == nullptr ||
                beta_phi == nullptr)
            {
                set_error("satbeam_problem_create: null array or m < 1");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            auto p = std::make_unique<satbeam_problem>();
            const auto n = static_cast<std::size_t>(m);
            p->spec.l_ss.assign(l_ss, l_ss + n);
            p->spec.l_st.assign(l_st, l_st + n);
            p->spec.bank.params.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                p->spec.bank.params[i] = {alpha[i], beta[i], alpha_phi[i], beta_phi[i]};
            p->spec.power_limit_w = power_limit_w;
            p->spec.interference_eps_w = interference_eps_w;
            p->spec.noise_sigma2_w = noise_sigma2_w;
            p->spec.theta0 = theta0_rad;
            p->spec.validate();
            *out = p.release();
            return SATBEAM_OK;
        });
    }

    void satbeam_problem_free(satbeam_problem *p) { delete p; }

    satbeam_status satbeam_problem_solve(const satbeam_problem *p, satbeam_report **out)
    {
        return guarded([&]() -> satbeam_status
        {
            if (p == nullptr || out == nullptr)
            {
                set_error("satbeam_problem_solve: null argument");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            auto r = std::make_unique<satbeam_report>();
            r->rep = satbeam::bf::solve(p->spec);
            const satbeam::bf::SolveStatus st = r->rep.status;
            *out = r.release();
            if (st == satbeam::bf::SolveStatus::max_iterations)
            {
                set_error("solver hit the iteration cap; report holds the best iterate");
                return SATBEAM_ERR_NO_CONVERGENCE;
            }
            if (st == satbeam::bf::SolveStatus::infeasible_input)
            {
                set_error("problem instance violates its invariants");
                return SATBEAM_ERR_CONFIG;
            }
            return SATBEAM_OK;
        });
    }

    void satbeam_report_free(satbeam_report *r) { delete r; }

    int satbeam_report_antenna_count(const satbeam_report *r)
    {
        return r == nullptr ? 0 : static_cast<int>(r->rep.zbar_star.zbar.size());
    }

    const char *satbeam_report_status(const satbeam_report *r)
    {
        return r == nullptr ? "" : satbeam::bf::to_string(r->rep.status);
    }

    double satbeam_report_objective(const satbeam_report *r)
    {
        return r == nullptr ? 0.0 : r->rep.objective;
    }

    double satbeam_report_rate_bps_hz(const satbeam_report *r)
    {
        return r == nullptr ? 0.0 : r->rep.rate_bps_hz;
    }

    double satbeam_report_kkt_residual(const satbeam_report *r)
    {
        return r == nullptr ? 0.0 : r->rep.kkt_residual;
    }

    int satbeam_report_iterations(const satbeam_report *r)
    {
        return r == nullptr ? 0 : r->rep.iterations;
    }

    satbeam_status satbeam_report_amplitudes(const satbeam_report *r, double *out, int len)
    {
        if (r == nullptr)
        {
            set_error("null report");
            return SATBEAM_ERR_INVALID_ARGUMENT;
        }
        return copy_vector(r->rep.weights.amplitudes, out, len);
    }

    satbeam_status satbeam_report_phases(const satbeam_report *r, double *out, int len)
    {
        if (r == nullptr)
        {
            set_error("null report");
            return SATBEAM_ERR_INVALID_ARGUMENT;
        }
        return copy_vector(r->rep.weights.phases, out, len);
    }

    satbeam_status satbeam_report_zbar(const satbeam_report *r, double *out, int len)
    {
        if (r == nullptr)
        {
            set_error("null report");
            return SATBEAM_ERR_INVALID_ARGUMENT;
        }
        return copy_vector(r->rep.zbar_star.zbar, out, len);
    }

    satbeam_status satbeam_report_to_json(const satbeam_report *r, char **out)
    {
        return guarded([&]() -> satbeam_status
        {
            if (r == nullptr || out == nullptr)
            {
                set_error("null argument");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            *out = dup_string(satbeam::config::solve_report_to_json(r->rep));
            return *out != nullptr ? SATBEAM_OK : SATBEAM_ERR_INTERNAL;
        });
    }

    satbeam_status satbeam_solve_config(const char *config_json,
                                        const uint64_t *seed_override, char **report_json)
    {
        return guarded([&]() -> satbeam_status
        {
            if (config_json == nullptr || report_json == nullptr)
            {
                set_error("null argument");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            const satbeam::bf::ProblemSpec spec =
                satbeam::config::build_problem(config_json, opt_seed(seed_override));
            const satbeam::bf::SolveReport rep = satbeam::bf::solve(spec);
            *report_json = dup_string(satbeam::config::solve_report_to_json(rep));
            if (*report_json == nullptr)
                return SATBEAM_ERR_INTERNAL;
            if (rep.status == satbeam::bf::SolveStatus::max_iterations)
            {
                set_error("solver hit the iteration cap; report holds the best iterate");
                return SATBEAM_ERR_NO_CONVERGENCE;
            }
            return SATBEAM_OK;
        });
    }

    satbeam_status satbeam_sweep_config(const char *config_json,
                                        const uint64_t *seed_override, const char *format,
                                        char **out_text)
    {
        return guarded([&]() -> satbeam_status
        {
            if (config_json == nullptr || out_text == nullptr || format == nullptr)
            {
                set_error("null argument");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            const std::string fmt = format;
            if (fmt != "csv" && fmt != "json")
            {
                set_error("format must be \"csv\" or \"json\"");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            const satbeam::sim::ExperimentConfig cfg =
                satbeam::config::build_experiment(config_json, opt_seed(seed_override));
            const satbeam::sim::SweepResult res = satbeam::sim::run_sweep(cfg);
            *out_text = dup_string(fmt == "csv" ? satbeam::config::sweep_to_csv(res)
                                                : satbeam::config::sweep_to_json(res));
            return *out_text != nullptr ? SATBEAM_OK : SATBEAM_ERR_INTERNAL;
        });
    }

    satbeam_status satbeam_pa_curve_config(const char *config_json, char **csv_out)
    {
        return guarded([&]() -> satbeam_status
        {
            if (csv_out == nullptr)
            {
                set_error("null argument");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            const std::string text = config_json == nullptr ? "" : config_json;
            const satbeam::config::PaCurveJob job = satbeam::config::build_pa_curve(text);
            *csv_out = dup_string(satbeam::config::pa_curve_csv(job));
            return *csv_out != nullptr ? SATBEAM_OK : SATBEAM_ERR_INTERNAL;
        });
    }

    satbeam_status satbeam_validate_config(const char *config_json, char **diagnostics_out)
    {
        return guarded([&]() -> satbeam_status
        {
            if (config_json == nullptr || diagnostics_out == nullptr)
            {
                set_error("null argument");
                return SATBEAM_ERR_INVALID_ARGUMENT;
            }
            const std::vector<std::string> diags =
                satbeam::config::validate_config_text(config_json);
            std::string joined;
            for (const auto &d : diags)
            {
                joined += d;
                joined += '\n';
            }
            *diagnostics_out = dup_string(joined);
            if (*diagnostics_out == nullptr)
                return SATBEAM_ERR_INTERNAL;
            if (!diags.empty())
            {
                set_error("configuration has " + std::to_string(diags.size()) +
                          " violation(s)");
                return SATBEAM_ERR_CONFIG;
            }
            return SATBEAM_OK;
        });
    }
}
