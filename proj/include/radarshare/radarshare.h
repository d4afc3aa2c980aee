// SPDX-License-Identifier: Apache-2.0
//
// radarshare: MIMO radar / cellular spectrum-sharing simulator
// Copyright (C) 2026 The radarshare authors
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

/* C interface to the radarshare simulator.
 *
 * All objects are opaque handles owned by the caller and released with the matching *_free
 * function. Every fallible call returns an rs_status; on failure rs_last_error() returns a
 * thread-local message describing the most recent error on the calling thread.
 * Strings returned through char** must be released with rs_string_free().
 */
#ifndef RADARSHARE_H
#define RADARSHARE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RADARSHARE_BUILD)
#    define RS_API __declspec(dllexport)
#  else
#    define RS_API __declspec(dllimport)
#  endif
#else
#  define RS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
    RS_OK = 0,
    RS_ERR_INVALID_ARGUMENT = 1,
    RS_ERR_PARSE = 2,
    RS_ERR_VALIDATION = 3,
    RS_ERR_IO = 4,
    RS_ERR_DEGENERATE_NULL_SPACE = 5,
    RS_ERR_NO_USABLE_NULL_SPACE = 6,
    RS_ERR_DEGENERATE_DENOMINATOR = 7,
    RS_ERR_INTERNAL = 99
} rs_status;

typedef struct rs_config rs_config;
typedef struct rs_report rs_report;
typedef struct rs_channel_set rs_channel_set;

RS_API const char *rs_version(void);
RS_API const char *rs_status_string(rs_status status);
RS_API const char *rs_last_error(void);
RS_API void rs_string_free(char *s);

/* ---- scenario configuration ---- */
RS_API rs_status rs_config_load(const char *path, rs_config **out);
RS_API rs_status rs_config_parse(const char *json_text, rs_config **out);
RS_API void rs_config_free(rs_config *cfg);
RS_API rs_status rs_config_set_trials(rs_config *cfg, int trials);
RS_API rs_status rs_config_set_seed(rs_config *cfg, uint64_t seed);
RS_API rs_status rs_config_set_output_dir(rs_config *cfg, const char *dir);
RS_API rs_status rs_config_set_noiseless(rs_config *cfg, int noiseless);
/* Restricts the delay sweep to truth +- the configured half width. */
RS_API rs_status rs_config_set_fast_grids(rs_config *cfg, int fast);
RS_API rs_status rs_config_get_trials(const rs_config *cfg, int *out);
RS_API rs_status rs_config_get_output_dir(const rs_config *cfg, char **out);
RS_API rs_status rs_config_to_json(const rs_config *cfg, char **out);

/* ---- scenario execution and reporting ---- */
RS_API rs_status rs_run_scenario(const rs_config *cfg, rs_report **out);
RS_API void rs_report_free(rs_report *report);
RS_API rs_status rs_report_emit(const rs_report *report, const char *dir);
RS_API rs_status rs_report_num_trials(const rs_report *report, int *out);
RS_API rs_status rs_report_failed_trials(const rs_report *report, int *out);
/* Largest ||H_best P_best X||_F / (||H_best||_F ||X||_F) over all trials. */
RS_API rs_status rs_report_max_interference(const rs_report *report, double *out);
RS_API rs_status rs_report_summary_json(const rs_report *report, char **out);

/* ---- interference channels ---- */
/* Draws the channel set the scenario uses for the given trial. */
RS_API rs_status rs_channels_sample(const rs_config *cfg, int trial, rs_channel_set **out);
RS_API rs_status rs_channels_load(const char *path, rs_channel_set **out);
RS_API rs_status rs_channels_save(const rs_channel_set *set, const char *path);
RS_API void rs_channels_free(rs_channel_set *set);
RS_API rs_status rs_channels_count(const rs_channel_set *set, size_t *out);
RS_API rs_status rs_channels_shape(const rs_channel_set *set, size_t index, size_t *rows, size_t *cols);

/* ---- null-space projector ----
 * h: rows x cols complex matrix, column-major, interleaved (re, im) doubles.
 * p_out: caller-provided buffer of 2 * cols * cols doubles, same layout.
 * A trivial null space yields a zero projector with *null_dim = 0 and RS_OK. */
RS_API rs_status rs_projector_compute(const double *h, size_t rows, size_t cols, double tol, double *p_out,
                                      int *null_dim);

#ifdef __cplusplus
}
#endif

#endif
