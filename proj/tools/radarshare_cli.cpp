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

// Command-line front end. Talks to the simulator exclusively through the C API.

#include "radarshare/radarshare.h"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace
{
    struct ConfigDeleter
    {
        void operator()(rs_config *c) const { rs_config_free(c); }
    };
    struct ReportDeleter
    {
        void operator()(rs_report *r) const { rs_report_free(r); }
    };
    struct ChannelsDeleter
    {
        void operator()(rs_channel_set *s) const { rs_channels_free(s); }
    };
    struct StringDeleter
    {
        void operator()(char *s) const { rs_string_free(s); }
    };

    using ConfigPtr = std::unique_ptr<rs_config, ConfigDeleter>;
    using ReportPtr = std::unique_ptr<rs_report, ReportDeleter>;
    using ChannelsPtr = std::unique_ptr<rs_channel_set, ChannelsDeleter>;
    using StringPtr = std::unique_ptr<char, StringDeleter>;

    int report_error(rs_status st, const std::string &context)
    {
        std::cerr << "error: " << context << ": " << rs_status_string(st) << ": " << rs_last_error() << "\n";
        return 2;
    }

    ConfigPtr load(const std::string &path, int &rc)
    {
        rs_config *raw = nullptr;
        const rs_status st = rs_config_load(path.c_str(), &raw);
        if (st != RS_OK)
        {
            rc = report_error(st, path);
            return nullptr;
        }
        return ConfigPtr(raw);
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"MIMO radar / cellular spectrum-sharing simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rs_version()));

    std::string config_path;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    bool noiseless = false;
    bool fast_grids = false;

    auto *run = app.add_subcommand("run", "Run a scenario and write CSV/JSON reports");
    run->add_option("config", config_path, "Scenario config (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--trials", trials, "Override the number of Monte Carlo trials")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Override the master seed");
    run->add_option("--out", out_dir, "Output directory (defaults to run.output_dir)");
    run->add_flag("--noiseless", noiseless, "Disable receiver noise");
    run->add_flag("--fast-grids", fast_grids, "Sweep delays only around the true delay");

    std::string validate_path;
    auto *validate = app.add_subcommand("validate", "Load and validate a scenario config");
    validate->add_option("config", validate_path, "Scenario config (JSON)")->required();

    std::string export_config, export_out;
    int export_trial = 0;
    auto *exp = app.add_subcommand("export-channels", "Write the interference channel set of one trial as JSON");
    exp->add_option("config", export_config, "Scenario config (JSON)")->required();
    exp->add_option("out", export_out, "Output JSON path")->required();
    exp->add_option("--trial", export_trial, "Trial index")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    int rc = 0;
    if (*validate)
    {
        ConfigPtr cfg = load(validate_path, rc);
        if (!cfg)
            return rc;
        char *json = nullptr;
        if (rs_status st = rs_config_to_json(cfg.get(), &json); st != RS_OK)
            return report_error(st, "config");
        StringPtr holder(json);
        std::cout << "valid: " << validate_path << "\n" << json;
        return 0;
    }

    if (*exp)
    {
        ConfigPtr cfg = load(export_config, rc);
        if (!cfg)
            return rc;
        rs_channel_set *raw = nullptr;
        if (rs_status st = rs_channels_sample(cfg.get(), export_trial, &raw); st != RS_OK)
            return report_error(st, "sample channels");
        ChannelsPtr set(raw);
        if (rs_status st = rs_channels_save(set.get(), export_out.c_str()); st != RS_OK)
            return report_error(st, export_out);
        size_t n = 0;
        rs_channels_count(set.get(), &n);
        std::cout << "wrote " << n << " channels to " << export_out << "\n";
        return 0;
    }

    ConfigPtr cfg = load(config_path, rc);
    if (!cfg)
        return rc;
    if (trials)
        if (rs_status st = rs_config_set_trials(cfg.get(), *trials); st != RS_OK)
            return report_error(st, "--trials");
    if (seed)
        rs_config_set_seed(cfg.get(), *seed);
    if (noiseless)
        rs_config_set_noiseless(cfg.get(), 1);
    if (fast_grids)
        rs_config_set_fast_grids(cfg.get(), 1);
    if (!out_dir.empty())
        if (rs_status st = rs_config_set_output_dir(cfg.get(), out_dir.c_str()); st != RS_OK)
            return report_error(st, "--out");

    char *dir_raw = nullptr;
    rs_config_get_output_dir(cfg.get(), &dir_raw);
    StringPtr dir(dir_raw);

    rs_report *rep_raw = nullptr;
    if (rs_status st = rs_run_scenario(cfg.get(), &rep_raw); st != RS_OK)
        return report_error(st, "run");
    ReportPtr report(rep_raw);
    if (rs_status st = rs_report_emit(report.get(), dir.get()); st != RS_OK)
        return report_error(st, "emit");

    int n = 0, failed = 0;
    double interference = 0.0;
    rs_report_num_trials(report.get(), &n);
    rs_report_failed_trials(report.get(), &failed);
    rs_report_max_interference(report.get(), &interference);
    std::cout << "trials: " << n << " (failed: " << failed << ")\n"
              << "max relative interference at selected BS: " << interference << "\n"
              << "reports written to " << dir.get() << "\n";
    return failed == 0 ? 0 : 1;
}
