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

#include "radarshare/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace radarshare
{
    using ojson = nlohmann::ordered_json;

    const char *case_name(WaveformCase c)
    {
        switch (c)
        {
        case WaveformCase::original:
            return "original";
        case WaveformCase::nsp_best:
            return "nsp_best";
        case WaveformCase::nsp_worst:
            return "nsp_worst";
        }
        return "?";
    }

    Truth scenario_truth(const ScenarioConfig &cfg)
    {
        return {rad_to_deg(cfg.scene.angle), cfg.scene.delay_samples(cfg.array, cfg.waveform.bandwidth),
                cfg.scene.doppler_hz(cfg.array)};
    }

    namespace
    {
        double median(std::vector<double> v)
        {
            if (v.empty())
                return 0.0;
            std::sort(v.begin(), v.end());
            const std::size_t mid = v.size() / 2;
            return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
        }

        double mean(const std::vector<double> &v)
        {
            if (v.empty())
                return 0.0;
            double s = 0.0;
            for (double x : v)
                s += x;
            return s / static_cast<double>(v.size());
        }

        double relative_interference(const ComplexMatrix &h, const WaveformMatrix &projected, const WaveformMatrix &x)
        {
            const double scale = h.norm() * x.samples.norm();
            return scale > 0.0 ? (h * projected.samples).norm() / scale : 0.0;
        }

        SurfaceTable empty_table(Axis axis, const EstimationGrid &grid, double sample_period)
        {
            SurfaceTable t;
            t.axis = axis;
            switch (axis)
            {
            case Axis::angle:
                for (double a : grid.angle)
                    t.grid_value.push_back(rad_to_deg(a));
                break;
            case Axis::delay:
                for (Eigen::Index d : grid.delay)
                    t.grid_value.push_back(static_cast<double>(d) * sample_period);
                break;
            case Axis::doppler:
                t.grid_value = grid.doppler;
                break;
            }
            for (auto &col : t.objective)
                col.assign(t.grid_value.size(), 0.0);
            return t;
        }

        struct CaseRun
        {
            CaseEstimates est;
            std::array<std::vector<double>, 3> surfaces;
        };

        CaseRun run_case(const ScenarioConfig &cfg, const EstimationGrid &grid, const Truth &truth,
                         const WaveformMatrix &x, int trial, WaveformCase which)
        {
            CaseRun out;
            try
            {
                ReceivedEcho y = synthesize_echo(cfg.scene, cfg.array, x);
                if (!cfg.noise.noiseless)
                    y = add_noise(y, cfg.noise.snr_db, noise_seed(cfg, trial, static_cast<int>(which)));

                const double fd = truth.doppler_hz;
                const auto ang = estimate_angle(y, x, truth.delay_samples, fd, grid.angle, cfg.array);
                const auto del = estimate_delay(y, x, cfg.scene.angle, fd, grid.delay, cfg.array);
                const auto dop = estimate_doppler(y, x, cfg.scene.angle, truth.delay_samples, grid.doppler, cfg.array);

                out.est.ok = true;
                out.est.theta_hat_deg = rad_to_deg(ang.theta_hat);
                out.est.delay_hat = del.delay_hat;
                out.est.doppler_hat_hz = dop.doppler_hat;
                out.est.angle_peak = ang.surface.peak();
                out.est.delay_peak = del.surface.peak();
                out.est.doppler_peak = dop.surface.peak();
                out.surfaces[static_cast<int>(Axis::angle)] = ang.surface.objective;
                out.surfaces[static_cast<int>(Axis::delay)] = del.surface.objective;
                out.surfaces[static_cast<int>(Axis::doppler)] = dop.surface.objective;
            }
            catch (const Error &e)
            {
                out.est.ok = false;
                out.est.error = e.what();
            }
            return out;
        }
    }

    std::array<CaseAggregate, num_cases> compute_aggregates(const std::vector<TrialRecord> &trials, const Truth &truth)
    {
        std::array<CaseAggregate, num_cases> agg;
        for (std::size_t c = 0; c < num_cases; ++c)
        {
            std::vector<double> ang, del, dop, peak;
            for (const auto &t : trials)
            {
                const auto &e = t.cases[c];
                if (!e.ok)
                    continue;
                ang.push_back(std::abs(e.theta_hat_deg - truth.theta_deg));
                del.push_back(std::abs(static_cast<double>(e.delay_hat - truth.delay_samples)));
                dop.push_back(std::abs(e.doppler_hat_hz - truth.doppler_hz));
                peak.push_back(e.angle_peak);
            }
            agg[c].count = static_cast<int>(ang.size());
            agg[c].mean_abs_angle_err_deg = mean(ang);
            agg[c].median_abs_angle_err_deg = median(ang);
            agg[c].mean_abs_delay_err_samples = mean(del);
            agg[c].median_abs_delay_err_samples = median(del);
            agg[c].mean_abs_doppler_err_hz = mean(dop);
            agg[c].median_abs_doppler_err_hz = median(dop);
            agg[c].mean_angle_peak = mean(peak);
        }
        return agg;
    }

    RunReport run_scenario(const ScenarioConfig &cfg)
    {
        cfg.validate();
        const auto t_start = std::chrono::steady_clock::now();

        RunReport report;
        report.config = cfg;
        report.truth = scenario_truth(cfg);
        const EstimationGrid grid = build_grid(cfg);

        report.waveform = generate_waveform(cfg.waveform.family, cfg.array.num_tx, cfg.waveform.num_samples(),
                                            waveform_seed(cfg), cfg.waveform.bandwidth);
        const WaveformMatrix &x = report.waveform;
        const double ts = x.sample_period();

        for (int a = 0; a < 3; ++a)
            report.surfaces[a] = empty_table(static_cast<Axis>(a), grid, ts);
        std::array<std::array<int, 3>, num_cases> surface_counts{};

        for (int trial = 0; trial < cfg.trials; ++trial)
        {
            TrialRecord rec;
            rec.trial = trial;
            rec.channel_seed = channel_seed(cfg, trial);

            const ChannelSet truth_set = sample_channel_set(cfg.array.num_tx, cfg.channels.rx_antennas_per_bs, rec.channel_seed);
            const ChannelSet known_set = perturb_csi(truth_set, cfg.channels.csi_error_std, csi_seed(cfg, trial));

            std::array<std::optional<WaveformMatrix>, num_cases> inputs;
            inputs[0] = x;
            try
            {
                const SelectionResult sel = select_channels(x, known_set, cfg.rank_tolerance);
                rec.selection_ok = true;
                rec.losses = sel.losses;
                for (const auto &p : sel.projectors)
                {
                    rec.channel_ranks.push_back(p.channel_rank);
                    rec.null_dims.push_back(p.null_dim);
                }
                rec.best_bs_id = known_set.channels[sel.best_index].bs_id;
                rec.worst_bs_id = known_set.channels[sel.worst_index].bs_id;

                const Projector &pb = sel.best_projector();
                inputs[1] = project_waveform(pb, x);
                inputs[2] = project_waveform(sel.worst_projector(), x);
                rec.best_interference = relative_interference(truth_set.channels[sel.best_index].matrix, *inputs[1], x);
                rec.worst_interference = relative_interference(truth_set.channels[sel.worst_index].matrix, *inputs[2], x);
                rec.best_idempotence_residual = (pb.matrix * pb.matrix - pb.matrix).norm();
            }
            catch (const Error &e)
            {
                rec.selection_ok = false;
                rec.selection_error = e.what();
            }

            std::array<SurfaceTable, 3> trial_tables;
            if (cfg.per_trial_surfaces)
                for (int a = 0; a < 3; ++a)
                    trial_tables[a] = empty_table(static_cast<Axis>(a), grid, ts);

            for (std::size_t c = 0; c < num_cases; ++c)
            {
                if (!inputs[c])
                {
                    rec.cases[c].ok = false;
                    rec.cases[c].error = "skipped: " + rec.selection_error;
                    continue;
                }
                CaseRun run = run_case(cfg, grid, report.truth, *inputs[c], trial, static_cast<WaveformCase>(c));
                rec.cases[c] = run.est;
                if (!run.est.ok)
                    continue;
                for (int a = 0; a < 3; ++a)
                {
                    auto &acc = report.surfaces[a].objective[c];
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        acc[i] += run.surfaces[a][i];
                    ++surface_counts[c][a];
                    if (cfg.per_trial_surfaces)
                        trial_tables[a].objective[c] = run.surfaces[a];
                }
            }
            if (cfg.per_trial_surfaces)
                report.per_trial_surfaces.push_back(std::move(trial_tables));

            const bool failed = !rec.selection_ok ||
                                std::any_of(rec.cases.begin(), rec.cases.end(), [](const auto &e) { return !e.ok; });
            if (failed)
                ++report.failed_trials;
            if (rec.selection_ok)
                report.max_best_interference = std::max(report.max_best_interference, rec.best_interference);
            report.trials.push_back(std::move(rec));
        }

        for (int a = 0; a < 3; ++a)
            for (std::size_t c = 0; c < num_cases; ++c)
                if (surface_counts[c][a] > 0)
                    for (double &v : report.surfaces[a].objective[c])
                        v /= surface_counts[c][a];

        report.aggregates = compute_aggregates(report.trials, report.truth);
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        return report;
    }

    // ------------------------------------------------------------------------------------------

    namespace
    {
        ojson case_json(const CaseEstimates &e)
        {
            ojson j;
            j["ok"] = e.ok;
            if (!e.ok)
            {
                j["error"] = e.error;
                return j;
            }
            j["theta_hat_deg"] = e.theta_hat_deg;
            j["delay_hat_samples"] = e.delay_hat;
            j["doppler_hat_hz"] = e.doppler_hat_hz;
            j["angle_peak"] = e.angle_peak;
            j["delay_peak"] = e.delay_peak;
            j["doppler_peak"] = e.doppler_peak;
            return j;
        }

        ojson aggregate_json(const CaseAggregate &a)
        {
            return {{"count", a.count},
                    {"mean_abs_angle_err_deg", a.mean_abs_angle_err_deg},
                    {"median_abs_angle_err_deg", a.median_abs_angle_err_deg},
                    {"mean_abs_delay_err_samples", a.mean_abs_delay_err_samples},
                    {"median_abs_delay_err_samples", a.median_abs_delay_err_samples},
                    {"mean_abs_doppler_err_hz", a.mean_abs_doppler_err_hz},
                    {"median_abs_doppler_err_hz", a.median_abs_doppler_err_hz},
                    {"mean_angle_peak", a.mean_angle_peak}};
        }

        void write_file(const std::filesystem::path &path, const std::string &content)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                fail(ErrorCode::io_error, "cannot open for writing: " + path.string());
            out << content;
            out.flush();
            if (!out)
                fail(ErrorCode::io_error, "write failed: " + path.string());
        }

        std::string fmt12(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
        }
    }

    std::string trials_to_json(const RunReport &report)
    {
        ojson arr = ojson::array();
        for (const auto &t : report.trials)
        {
            ojson j;
            j["trial"] = t.trial;
            j["channel_seed"] = t.channel_seed;
            j["selection_ok"] = t.selection_ok;
            if (t.selection_ok)
            {
                j["losses"] = t.losses;
                j["channel_ranks"] = t.channel_ranks;
                j["null_dims"] = t.null_dims;
                j["best_bs_id"] = t.best_bs_id;
                j["worst_bs_id"] = t.worst_bs_id;
                j["best_interference"] = t.best_interference;
                j["worst_interference"] = t.worst_interference;
                j["best_idempotence_residual"] = t.best_idempotence_residual;
            }
            else
                j["selection_error"] = t.selection_error;
            ojson cases;
            for (std::size_t c = 0; c < num_cases; ++c)
                cases[case_name(static_cast<WaveformCase>(c))] = case_json(t.cases[c]);
            j["estimates"] = cases;
            arr.push_back(j);
        }
        return arr.dump(2) + "\n";
    }

    std::string summary_to_json(const RunReport &report)
    {
        ojson j;
        j["trials"] = report.trials.size();
        j["failed_trials"] = report.failed_trials;
        j["truth"] = {{"theta_deg", report.truth.theta_deg},
                      {"delay_samples", report.truth.delay_samples},
                      {"doppler_hz", report.truth.doppler_hz}};
        ojson agg;
        for (std::size_t c = 0; c < num_cases; ++c)
            agg[case_name(static_cast<WaveformCase>(c))] = aggregate_json(report.aggregates[c]);
        j["aggregates"] = agg;
        j["max_best_interference"] = report.max_best_interference;
        j["elapsed_seconds"] = report.elapsed_seconds;
        j["config"] = ojson::parse(config_to_json(report.config));
        return j.dump(2) + "\n";
    }

    std::string surface_to_csv(const SurfaceTable &table)
    {
        std::string out = "grid_value,obj_original,obj_nsp_best,obj_nsp_worst\n";
        for (std::size_t i = 0; i < table.grid_value.size(); ++i)
        {
            out += fmt12(table.grid_value[i]);
            for (std::size_t c = 0; c < num_cases; ++c)
            {
                out += ',';
                out += fmt12(table.objective[c][i]);
            }
            out += '\n';
        }
        return out;
    }

    std::vector<std::filesystem::path> emit_reports(const RunReport &report, const std::filesystem::path &dir)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            fail(ErrorCode::io_error, "cannot create output directory " + dir.string() + ": " + ec.message());

        std::vector<std::filesystem::path> written;
        auto emit = [&](const std::filesystem::path &p, const std::string &content) {
            write_file(p, content);
            written.push_back(p);
        };

        for (int a = 0; a < 3; ++a)
            emit(dir / (std::string("surfaces_") + axis_name(static_cast<Axis>(a)) + ".csv"),
                 surface_to_csv(report.surfaces[a]));
        emit(dir / "trials.json", trials_to_json(report));
        emit(dir / "summary.json", summary_to_json(report));

        if (!report.per_trial_surfaces.empty())
        {
            const auto sub = dir / "trial_surfaces";
            std::filesystem::create_directories(sub, ec);
            if (ec)
                fail(ErrorCode::io_error, "cannot create " + sub.string() + ": " + ec.message());
            for (std::size_t t = 0; t < report.per_trial_surfaces.size(); ++t)
            {
                char name[64];
                for (int a = 0; a < 3; ++a)
                {
                    std::snprintf(name, sizeof name, "trial_%04zu_%s.csv", t, axis_name(static_cast<Axis>(a)));
                    emit(sub / name, surface_to_csv(report.per_trial_surfaces[t][a]));
                }
            }
        }

        if (report.config.dump_waveform)
        {
            std::string csv = "tx,sample,real,imag\n";
            const auto &s = report.waveform.samples;
            for (Eigen::Index k = 0; k < s.rows(); ++k)
                for (Eigen::Index n = 0; n < s.cols(); ++n)
                    csv += std::to_string(k) + ',' + std::to_string(n) + ',' + fmt12(s(k, n).real()) + ',' +
                           fmt12(s(k, n).imag()) + '\n';
            emit(dir / "waveform.csv", csv);
        }
        return written;
    }
}
