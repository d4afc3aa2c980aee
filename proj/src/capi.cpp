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

#include "radarshare/radarshare.h"
#include "radarshare/scenario.hpp"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct rs_config
{
    radarshare::ScenarioConfig cfg;
};

struct rs_report
{
    radarshare::RunReport report;
};

struct rs_channel_set
{
    radarshare::ChannelSet set;
};

namespace
{
    thread_local std::string last_error;

    rs_status to_status(radarshare::ErrorCode code) { return static_cast<rs_status>(static_cast<int>(code)); }

    template <typename F>
    rs_status guarded(F &&f)
    {
        try
        {
            last_error.clear();
            f();
            return RS_OK;
        }
        catch (const radarshare::Error &e)
        {
            last_error = e.what();
            return to_status(e.code());
        }
        catch (const std::bad_alloc &)
        {
            last_error = "out of memory";
            return RS_ERR_INTERNAL;
        }
        catch (const std::exception &e)
        {
            last_error = e.what();
            return RS_ERR_INTERNAL;
        }
    }

    rs_status null_arg(const char *what)
    {
        last_error = std::string("null argument: ") + what;
        return RS_ERR_INVALID_ARGUMENT;
    }

    char *dup_string(const std::string &s)
    {
        char *out = new char[s.size() + 1];
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }
}

extern "C" {

const char *rs_version(void) { return "1.0.0"; }

const char *rs_status_string(rs_status status)
{
    if (status == RS_OK)
        return "ok";
    if (status == RS_ERR_INTERNAL)
        return "internal error";
    return radarshare::error_code_name(static_cast<radarshare::ErrorCode>(status));
}

const char *rs_last_error(void) { return last_error.c_str(); }

void rs_string_free(char *s) { delete[] s; }

rs_status rs_config_load(const char *path, rs_config **out)
{
    if (!path || !out)
        return null_arg("path/out");
    return guarded([&] { *out = new rs_config{radarshare::load_config(path)}; });
}

rs_status rs_config_parse(const char *json_text, rs_config **out)
{
    if (!json_text || !out)
        return null_arg("json_text/out");
    return guarded([&] { *out = new rs_config{radarshare::parse_config(json_text)}; });
}

void rs_config_free(rs_config *cfg) { delete cfg; }

rs_status rs_config_set_trials(rs_config *cfg, int trials)
{
    if (!cfg)
        return null_arg("cfg");
    if (trials < 1)
    {
        last_error = "run.trials: must be >= 1";
        return RS_ERR_VALIDATION;
    }
    cfg->cfg.trials = trials;
    return RS_OK;
}

rs_status rs_config_set_seed(rs_config *cfg, uint64_t seed)
{
    if (!cfg)
        return null_arg("cfg");
    cfg->cfg.seed = seed;
    return RS_OK;
}

rs_status rs_config_set_output_dir(rs_config *cfg, const char *dir)
{
    if (!cfg || !dir)
        return null_arg("cfg/dir");
    if (!*dir)
    {
        last_error = "run.output_dir: must not be empty";
        return RS_ERR_VALIDATION;
    }
    cfg->cfg.output_dir = dir;
    return RS_OK;
}

rs_status rs_config_set_noiseless(rs_config *cfg, int noiseless)
{
    if (!cfg)
        return null_arg("cfg");
    cfg->cfg.noise.noiseless = noiseless != 0;
    return RS_OK;
}

rs_status rs_config_set_fast_grids(rs_config *cfg, int fast)
{
    if (!cfg)
        return null_arg("cfg");
    cfg->cfg.grids.delay_mode = fast ? radarshare::DelayGridMode::window : radarshare::DelayGridMode::full;
    return RS_OK;
}

rs_status rs_config_get_trials(const rs_config *cfg, int *out)
{
    if (!cfg || !out)
        return null_arg("cfg/out");
    *out = cfg->cfg.trials;
    return RS_OK;
}

rs_status rs_config_get_output_dir(const rs_config *cfg, char **out)
{
    if (!cfg || !out)
        return null_arg("cfg/out");
    return guarded([&] { *out = dup_string(cfg->cfg.output_dir); });
}

rs_status rs_config_to_json(const rs_config *cfg, char **out)
{
    if (!cfg || !out)
        return null_arg("cfg/out");
    return guarded([&] { *out = dup_string(radarshare::config_to_json(cfg->cfg)); });
}

rs_status rs_run_scenario(const rs_config *cfg, rs_report **out)
{
    if (!cfg || !out)
        return null_arg("cfg/out");
    return guarded([&] { *out = new rs_report{radarshare::run_scenario(cfg->cfg)}; });
}

void rs_report_free(rs_report *report) { delete report; }

rs_status rs_report_emit(const rs_report *report, const char *dir)
{
    if (!report || !dir)
        return null_arg("report/dir");
    return guarded([&] { radarshare::emit_reports(report->report, dir); });
}

rs_status rs_report_num_trials(const rs_report *report, int *out)
{
    if (!report || !out)
        return null_arg("report/out");
    *out = static_cast<int>(report->report.trials.size());
    return RS_OK;
}

rs_status rs_report_failed_trials(const rs_report *report, int *out)
{
    if (!report || !out)
        return null_arg("report/out");
    *out = report->report.failed_trials;
    return RS_OK;
}

rs_status rs_report_max_interference(const rs_report *report, double *out)
{
    if (!report || !out)
        return null_arg("report/out");
    *out = report->report.max_best_interference;
    return RS_OK;
}

rs_status rs_report_summary_json(const rs_report *report, char **out)
{
    if (!report || !out)
        return null_arg("report/out");
    return guarded([&] { *out = dup_string(radarshare::summary_to_json(report->report)); });
}

rs_status rs_channels_sample(const rs_config *cfg, int trial, rs_channel_set **out)
{
    if (!cfg || !out)
        return null_arg("cfg/out");
    if (trial < 0)
    {
        last_error = "trial index must be >= 0";
        return RS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const auto &c = cfg->cfg;
        *out = new rs_channel_set{radarshare::sample_channel_set(c.array.num_tx, c.channels.rx_antennas_per_bs,
                                                                 radarshare::channel_seed(c, trial))};
    });
}

rs_status rs_channels_load(const char *path, rs_channel_set **out)
{
    if (!path || !out)
        return null_arg("path/out");
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            radarshare::fail(radarshare::ErrorCode::io_error, std::string("cannot open channel file: ") + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        *out = new rs_channel_set{radarshare::channel_set_from_json(ss.str())};
    });
}

rs_status rs_channels_save(const rs_channel_set *set, const char *path)
{
    if (!set || !path)
        return null_arg("set/path");
    return guarded([&] {
        std::ofstream outf(path, std::ios::binary | std::ios::trunc);
        if (!outf)
            radarshare::fail(radarshare::ErrorCode::io_error, std::string("cannot open for writing: ") + path);
        outf << radarshare::channel_set_to_json(set->set);
        if (!outf)
            radarshare::fail(radarshare::ErrorCode::io_error, std::string("write failed: ") + path);
    });
}

void rs_channels_free(rs_channel_set *set) { delete set; }

rs_status rs_channels_count(const rs_channel_set *set, size_t *out)
{
    if (!set || !out)
        return null_arg("set/out");
    *out = set->set.size();
    return RS_OK;
}

rs_status rs_channels_shape(const rs_channel_set *set, size_t index, size_t *rows, size_t *cols)
{
    if (!set || !rows || !cols)
        return null_arg("set/rows/cols");
    if (index >= set->set.size())
    {
        last_error = "channel index out of range";
        return RS_ERR_INVALID_ARGUMENT;
    }
    *rows = static_cast<size_t>(set->set.channels[index].matrix.rows());
    *cols = static_cast<size_t>(set->set.channels[index].matrix.cols());
    return RS_OK;
}

rs_status rs_projector_compute(const double *h, size_t rows, size_t cols, double tol, double *p_out, int *null_dim)
{
    if (!h || !p_out || !null_dim)
        return null_arg("h/p_out/null_dim");
    if (rows == 0 || cols == 0)
    {
        last_error = "channel matrix must be non-empty";
        return RS_ERR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        const auto r = static_cast<Eigen::Index>(rows);
        const auto c = static_cast<Eigen::Index>(cols);
        radarshare::ComplexMatrix m(r, c);
        for (Eigen::Index j = 0; j < c; ++j)
            for (Eigen::Index i = 0; i < r; ++i)
            {
                const double *e = h + 2 * (j * r + i);
                m(i, j) = {e[0], e[1]};
            }
        const radarshare::Projector p = radarshare::projection_matrix(m, tol);
        for (Eigen::Index j = 0; j < c; ++j)
            for (Eigen::Index i = 0; i < c; ++i)
            {
                double *e = p_out + 2 * (j * c + i);
                e[0] = p.matrix(i, j).real();
                e[1] = p.matrix(i, j).imag();
            }
        *null_dim = p.null_dim;
    });
}

}
