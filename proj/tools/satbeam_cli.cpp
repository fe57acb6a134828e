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
// Command-line front end. Everything substantive happens behind the shared
// library's C API; this binary only parses flags, moves file contents, and
// maps status codes to exit codes (0 ok, 2 config error, 3 non-convergence).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "satbeam/satbeam.h"

namespace
{
    struct CommonOpts
    {
        std::string config_path;
        std::string out_path;
        std::string format = "csv";
        std::optional<std::uint64_t> seed;
        bool verbose = false;
    };

    int exit_code_for(satbeam_status st)
    {
        switch (st)
        {
        case SATBEAM_OK:
            return 0;
        case SATBEAM_ERR_NO_CONVERGENCE:
            return 3;
        case SATBEAM_ERR_CONFIG:
        case SATBEAM_ERR_INVALID_ARGUMENT:
            return 2;
        default:
            return 1;
        }
    }

    bool read_file(const std::string &path, std::string &out, std::string &err)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
        {
            err = "cannot read config file: " + path;
            return false;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        out = ss.str();
        return true;
    }

    int write_output(const CommonOpts &opts, const char *text)
    {
        if (opts.out_path.empty())
        {
            std::cout << text;
            return 0;
        }
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "error: cannot write output file: " << opts.out_path << "\n";
            return 1;
        }
        out << text;
        return 0;
    }

    void report_failure(const CommonOpts &opts, satbeam_status st)
    {
        std::cerr << "error: " << satbeam_last_error() << "\n";
        if (opts.verbose)
            std::cerr << "status code: " << st << "\n";
    }

    void add_common(CLI::App *cmd, CommonOpts &opts, bool config_required,
                    bool with_format)
    {
        auto *copt = cmd->add_option("--config", opts.config_path, "configuration file (JSON)");
        if (config_required)
            copt->required();
        cmd->add_option("--out", opts.out_path, "output file (default: stdout)");
        if (with_format)
            cmd->add_option("--format", opts.format, "output format: csv or json")
                ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", opts.seed, "override the config seed");
        cmd->add_flag("-v,--verbose", opts.verbose, "verbose diagnostics on stderr");
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"beamforming design and Monte Carlo sweeps for spectrum-sharing "
                 "satellite-terrestrial links with nonlinear PAs"};
    app.require_subcommand(1);

    CommonOpts opts;
    CLI::App *solve = app.add_subcommand("solve", "solve one beamforming instance");
    add_common(solve, opts, true, false);
    CLI::App *sweep = app.add_subcommand("sweep", "run a Monte Carlo parameter sweep");
    add_common(sweep, opts, true, true);
    CLI::App *pa_curve = app.add_subcommand("pa-curve", "tabulate the PA AM/AM and AM/PM curves");
    add_common(pa_curve, opts, false, false);
    CLI::App *validate = app.add_subcommand("validate", "check a config without running it");
    add_common(validate, opts, true, false);

    CLI11_PARSE(app, argc, argv);

    std::string config_text;
    if (!opts.config_path.empty())
    {
        std::string err;
        if (!read_file(opts.config_path, config_text, err))
        {
            std::cerr << "error: " << err << "\n";
            return 2;
        }
    }

    const std::uint64_t seed_value = opts.seed.value_or(0);
    const std::uint64_t *seed_ptr = opts.seed ? &seed_value : nullptr;

    char *text = nullptr;
    satbeam_status st = SATBEAM_OK;

    if (solve->parsed())
    {
        st = satbeam_solve_config(config_text.c_str(), seed_ptr, &text);
        // non-convergence still carries a best-iterate report
        if (text != nullptr && (st == SATBEAM_OK || st == SATBEAM_ERR_NO_CONVERGENCE))
        {
            const int werr = write_output(opts, text);
            satbeam_string_free(text);
            if (werr != 0)
                return werr;
        }
        if (st != SATBEAM_OK)
            report_failure(opts, st);
        return exit_code_for(st);
    }

    if (sweep->parsed())
    {
        st = satbeam_sweep_config(config_text.c_str(), seed_ptr, opts.format.c_str(), &text);
        if (st == SATBEAM_OK)
        {
            const int werr = write_output(opts, text);
            satbeam_string_free(text);
            return werr;
        }
        report_failure(opts, st);
        return exit_code_for(st);
    }

    if (pa_curve->parsed())
    {
        st = satbeam_pa_curve_config(config_text.empty() ? nullptr : config_text.c_str(), &text);
        if (st == SATBEAM_OK)
        {
            const int werr = write_output(opts, text);
            satbeam_string_free(text);
            return werr;
        }
        report_failure(opts, st);
        return exit_code_for(st);
    }

    // validate
    char *diags = nullptr;
    st = satbeam_validate_config(config_text.c_str(), &diags);
    if (diags != nullptr)
    {
        if (diags[0] != '\0')
            std::cout << diags;
        else if (opts.verbose)
            std::cout << "config is clean\n";
        satbeam_string_free(diags);
    }
    if (st != SATBEAM_OK && opts.verbose)
        report_failure(opts, st);
    return exit_code_for(st);
}
