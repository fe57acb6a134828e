/* SPDX-License-Identifier: Apache-2.0
 *
 * satbeam - beamforming design and link simulation for spectrum-sharing
 * satellite-terrestrial networks with nonlinear power amplifiers
 * Copyright (C) 2026 the satbeam developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C API of the satbeam shared library. All functions return a status code;
 * SATBEAM_OK is 0. On failure, satbeam_last_error() gives a thread-local
 * message describing what went wrong. Strings returned through char** out
 * parameters are owned by the caller and released with satbeam_string_free().
 */

#ifndef SATBEAM_H
#define SATBEAM_H

#include <stdint.h>

#if defined(_WIN32)
#define SATBEAM_API __declspec(dllexport)
#else
#define SATBEAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C"
{
#endif

    typedef int satbeam_status;

#define SATBEAM_OK 0
#define SATBEAM_ERR_INVALID_ARGUMENT 1
#define SATBEAM_ERR_CONFIG 2
#define SATBEAM_ERR_NO_CONVERGENCE 3
#define SATBEAM_ERR_INTERNAL 4

    /* Opaque handles. */
    typedef struct satbeam_problem satbeam_problem;
    typedef struct satbeam_report satbeam_report;

    SATBEAM_API const char *satbeam_version(void);

    /* Thread-local message for the most recent failing call. */
    SATBEAM_API const char *satbeam_last_error(void);

    SATBEAM_API void satbeam_string_free(char *s);

    /* --- direct numeric surface ----------------------------------------- */

    /* Builds a problem instance from arrays of length m. All quantities are
     * linear (watts / natural amplitude units). */
    SATBEAM_API satbeam_status satbeam_problem_create(
        int m, const double *l_ss, const double *l_st, const double *alpha,
        const double *beta, const double *alpha_phi, const double *beta_phi,
        double power_limit_w, double interference_eps_w, double noise_sigma2_w,
        double theta0_rad, satbeam_problem **out);

    SATBEAM_API void satbeam_problem_free(satbeam_problem *p);

    /* Runs the optimal beamforming design. Returns SATBEAM_OK for an optimal
     * solve and SATBEAM_ERR_NO_CONVERGENCE when the iteration cap was hit; in
     * both cases *out carries the (best) report. */
    SATBEAM_API satbeam_status satbeam_problem_solve(const satbeam_problem *p,
                                                     satbeam_report **out);

    SATBEAM_API void satbeam_report_free(satbeam_report *r);

    SATBEAM_API int satbeam_report_antenna_count(const satbeam_report *r);
    SATBEAM_API const char *satbeam_report_status(const satbeam_report *r);
    SATBEAM_API double satbeam_report_objective(const satbeam_report *r);
    SATBEAM_API double satbeam_report_rate_bps_hz(const satbeam_report *r);
    SATBEAM_API double satbeam_report_kkt_residual(const satbeam_report *r);
    SATBEAM_API int satbeam_report_iterations(const satbeam_report *r);

    /* Copies m doubles into out (must have room for antenna_count values). */
    SATBEAM_API satbeam_status satbeam_report_amplitudes(const satbeam_report *r,
                                                         double *out, int len);
    SATBEAM_API satbeam_status satbeam_report_phases(const satbeam_report *r,
                                                     double *out, int len);
    SATBEAM_API satbeam_status satbeam_report_zbar(const satbeam_report *r,
                                                   double *out, int len);

    SATBEAM_API satbeam_status satbeam_report_to_json(const satbeam_report *r,
                                                      char **out);

    /* --- config-document surface (what the CLI calls) -------------------- */

    /* seed_override may be NULL to use the seed from the config document. */

    SATBEAM_API satbeam_status satbeam_solve_config(const char *config_json,
                                                    const uint64_t *seed_override,
                                                    char **report_json);

    /* format is "csv" or "json". */
    SATBEAM_API satbeam_status satbeam_sweep_config(const char *config_json,
                                                    const uint64_t *seed_override,
                                                    const char *format,
                                                    char **out_text);

    /* config_json may be NULL or empty for the default PA curve. */
    SATBEAM_API satbeam_status satbeam_pa_curve_config(const char *config_json,
                                                       char **csv_out);

    /* Returns SATBEAM_OK iff the document is clean; *diagnostics_out receives
     * one message per line (empty string when clean). */
    SATBEAM_API satbeam_status satbeam_validate_config(const char *config_json,
                                                       char **diagnostics_out);

#ifdef __cplusplus
}
#endif

#endif /* SATBEAM_H */
