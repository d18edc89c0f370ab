/* SPDX-License-Identifier: Apache-2.0
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
 * C interface to the eta-mu outage library.
 *
 * Every function returns an etamu_status. On failure a human-readable message
 * is available from etamu_last_error() until the next call on the same thread.
 * Handles are opaque; free them with the matching *_free function.
 */

#ifndef ETAMU_ETAMU_H
#define ETAMU_ETAMU_H

#include <stddef.h>
#include <stdint.h>

#if defined(ETAMU_BUILDING_LIBRARY)
#define ETAMU_API __attribute__((visibility("default")))
#else
#define ETAMU_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etamu_status {
    ETAMU_OK = 0,
    ETAMU_E_INVALID_ARGUMENT = 1,
    ETAMU_E_NON_POSITIVE = 2,
    ETAMU_E_NON_FINITE = 3,
    ETAMU_E_NOT_INTEGER = 4,
    ETAMU_E_UNSTABLE = 5,
    ETAMU_E_TOO_LARGE = 6,
    ETAMU_E_QUADRATURE = 7,
    ETAMU_E_SCHEMA = 8,
    ETAMU_E_IO = 9,
    ETAMU_E_INTERNAL = 10
} etamu_status;

typedef enum etamu_mode {
    ETAMU_MODE_TYPE1 = 0,
    ETAMU_MODE_TYPE2 = 1,
    ETAMU_MODE_CORRELATED_TYPE1 = 2,
    ETAMU_MODE_CORRELATED_TYPE2 = 3
} etamu_mode;

/* Squared eta-mu branch, format 1. */
typedef struct etamu_branch {
    double omega;
    double eta;
    double mu;
} etamu_branch;

/* Squared Nakagami-m branch. */
typedef struct etamu_nakagami {
    double omega;
    double m;
} etamu_nakagami;

/* Eigenvalue group of a correlated-MRC signal power. */
typedef struct etamu_corr_group {
    double lambda_x;
    double lambda_y;
    uint32_t xi_x;
    uint32_t xi_y;
} etamu_corr_group;

typedef struct etamu_sweep {
    double omega_db_min;
    double omega_db_max;
    double omega_db_step;
} etamu_sweep;

typedef struct etamu_scenario etamu_scenario;

/* Default term budget of the closed form; pass 0 to any budget argument to use it. */
#define ETAMU_DEFAULT_TERM_BUDGET 10000000ULL

ETAMU_API const char* etamu_version(void);
ETAMU_API const char* etamu_last_error(void);
ETAMU_API const char* etamu_status_name(etamu_status status);

/* ---- direct entry points ------------------------------------------------ */

/* Closed-form CDF at z from raw coefficients: n_numerator pairs (a, alpha)
 * and n_poles distinct poles (beta, b). Poles are merged and sorted first. */
ETAMU_API etamu_status etamu_theta(double z, const double* a, const double* alpha, size_t n_numerator,
                                   const double* beta, const uint32_t* b, size_t n_poles,
                                   uint64_t term_budget, double* out);

ETAMU_API etamu_status etamu_outage_type1(double zeta, const etamu_branch* soi, size_t n_soi,
                                          const etamu_branch* cci, size_t n_cci, uint64_t term_budget,
                                          double* out);
ETAMU_API etamu_status etamu_outage_type2(double zeta, const etamu_branch* soi, size_t n_soi,
                                          const etamu_nakagami* cci, size_t n_cci, uint64_t term_budget,
                                          double* out);
ETAMU_API etamu_status etamu_outage_correlated_type1(double zeta, const etamu_corr_group* soi, size_t n_groups,
                                                     const etamu_branch* cci, size_t n_cci,
                                                     uint64_t term_budget, double* out);
ETAMU_API etamu_status etamu_outage_correlated_type2(double zeta, const etamu_corr_group* soi, size_t n_groups,
                                                     const etamu_nakagami* cci, size_t n_cci,
                                                     uint64_t term_budget, double* out);

/* ---- scenario files ----------------------------------------------------- */

ETAMU_API etamu_status etamu_scenario_parse(const char* json_text, etamu_scenario** out);
ETAMU_API etamu_status etamu_scenario_load(const char* path, etamu_scenario** out);
ETAMU_API void etamu_scenario_free(etamu_scenario* scenario);

ETAMU_API etamu_status etamu_scenario_mode(const etamu_scenario* scenario, etamu_mode* out);
ETAMU_API etamu_status etamu_scenario_zeta(const etamu_scenario* scenario, double* out);
/* *has_sweep is set to 0 when the file has no sweep block; *out is then untouched. */
ETAMU_API etamu_status etamu_scenario_sweep(const etamu_scenario* scenario, etamu_sweep* out, int* has_sweep);

/* Test hook: scale the largest closed-form pole by factor (1.0 restores). */
ETAMU_API etamu_status etamu_scenario_set_pole_perturbation(etamu_scenario* scenario, double factor);

/* Evaluations at a linear average SIR omega. */
ETAMU_API etamu_status etamu_scenario_closed_form(const etamu_scenario* scenario, double omega,
                                                  uint64_t term_budget, double* out);
ETAMU_API etamu_status etamu_scenario_contour(const etamu_scenario* scenario, double omega, double* out,
                                              double* error_estimate);
ETAMU_API etamu_status etamu_scenario_monte_carlo(const etamu_scenario* scenario, double omega,
                                                  uint64_t samples, uint64_t seed, uint32_t streams,
                                                  double* p_hat, double* std_err);

#ifdef __cplusplus
}
#endif

#endif /* ETAMU_ETAMU_H */
