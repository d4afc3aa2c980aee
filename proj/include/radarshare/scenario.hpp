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

#ifndef RADARSHARE_SCENARIO_HPP
#define RADARSHARE_SCENARIO_HPP

#include "radarshare/array_geometry.hpp"
#include "radarshare/channel.hpp"
#include "radarshare/echo.hpp"
#include "radarshare/estimator.hpp"
#include "radarshare/nullspace.hpp"
#include "radarshare/selection.hpp"
#include "radarshare/waveform.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace radarshare
{
    struct WaveformSection
    {
        WaveformFamily family = WaveformFamily::orthogonal;
        double bandwidth = 10e6;        // B [Hz], also the sample rate
        double observation_time = 1e-3; // T_0 [s]
        std::optional<std::uint64_t> seed;

        Eigen::Index num_samples() const;
    };

    struct ChannelSection
    {
        std::vector<int> rx_antennas_per_bs{2, 4, 6, 8};
        double csi_error_std = 0.0;
        std::optional<std::uint64_t> seed;
    };

    struct NoiseSection
    {
        bool noiseless = true;
        double snr_db = 20.0;
        std::optional<std::uint64_t> seed;
    };

    enum class DelayGridMode
    {
        full,   // 0 .. N-1
        window, // truth +- half_width
    };

    struct GridSection
    {
        double angle_start_deg = -90.0;
        double angle_stop_deg = 90.0;
        double angle_step_deg = 0.1;
        DelayGridMode delay_mode = DelayGridMode::full;
        int delay_half_width = 50;
        double doppler_start_hz = 0.0;
        double doppler_stop_hz = 100e3;
        double doppler_step_hz = 100.0;
    };

    struct ScenarioConfig
    {
        ArrayConfig array;
        WaveformSection waveform;
        ChannelSection channels;
        TargetScene scene; // angle stored in radians
        NoiseSection noise;
        GridSection grids;
        int trials = 1;
        std::uint64_t seed = 1; // master seed
        double rank_tolerance = default_rank_tolerance;
        std::string output_dir = "out";
        bool per_trial_surfaces = false;
        bool dump_waveform = false;

        // Throws Error(validation_error) with a dotted field path.
        void validate() const;
    };

    // Flat-section JSON document; see README for the schema. Only "array" is mandatory.
    ScenarioConfig parse_config(const std::string &text);
    ScenarioConfig load_config(const std::filesystem::path &path);
    std::string config_to_json(const ScenarioConfig &cfg);

    EstimationGrid build_grid(const ScenarioConfig &cfg);

    // Per-concern seeds. A section seed, when present, replaces the master seed as the base.
    std::uint64_t waveform_seed(const ScenarioConfig &cfg);
    std::uint64_t channel_seed(const ScenarioConfig &cfg, int trial);
    std::uint64_t csi_seed(const ScenarioConfig &cfg, int trial);
    std::uint64_t noise_seed(const ScenarioConfig &cfg, int trial, int waveform_case);

    enum class WaveformCase
    {
        original = 0,
        nsp_best = 1,
        nsp_worst = 2,
    };
    inline constexpr std::size_t num_cases = 3;
    const char *case_name(WaveformCase c);

    struct CaseEstimates
    {
        bool ok = false;
        std::string error;
        double theta_hat_deg = 0.0;
        Eigen::Index delay_hat = 0;
        double doppler_hat_hz = 0.0;
        double angle_peak = 0.0;
        double delay_peak = 0.0;
        double doppler_peak = 0.0;
    };

    struct TrialRecord
    {
        int trial = 0;
        std::uint64_t channel_seed = 0;
        bool selection_ok = false;
        std::string selection_error;
        std::vector<double> losses;
        std::vector<int> channel_ranks;
        std::vector<int> null_dims;
        int best_bs_id = 0;
        int worst_bs_id = 0;
        // ||H_true P X||_F / (||H_true||_F ||X||_F), measured against the true (unperturbed) channel.
        double best_interference = 0.0;
        double worst_interference = 0.0;
        double best_idempotence_residual = 0.0; // ||P^2 - P||_F
        std::array<CaseEstimates, num_cases> cases;
    };

    struct CaseAggregate
    {
        int count = 0;
        double mean_abs_angle_err_deg = 0.0;
        double median_abs_angle_err_deg = 0.0;
        double mean_abs_delay_err_samples = 0.0;
        double median_abs_delay_err_samples = 0.0;
        double mean_abs_doppler_err_hz = 0.0;
        double median_abs_doppler_err_hz = 0.0;
        double mean_angle_peak = 0.0;
    };

    struct Truth
    {
        double theta_deg = 0.0;
        Eigen::Index delay_samples = 0;
        double doppler_hz = 0.0;
    };

    // Axis values for CSV: angle [deg], delay [s], doppler [Hz]; objective per case.
    struct SurfaceTable
    {
        Axis axis = Axis::angle;
        std::vector<double> grid_value;
        std::array<std::vector<double>, num_cases> objective;
    };

    struct RunReport
    {
        ScenarioConfig config;
        Truth truth;
        std::vector<TrialRecord> trials;
        std::array<CaseAggregate, num_cases> aggregates;
        std::array<SurfaceTable, 3> surfaces; // trial-averaged, indexed by Axis
        std::vector<std::array<SurfaceTable, 3>> per_trial_surfaces;
        WaveformMatrix waveform;
        double max_best_interference = 0.0;
        int failed_trials = 0;
        double elapsed_seconds = 0.0;
    };

    Truth scenario_truth(const ScenarioConfig &cfg);
    std::array<CaseAggregate, num_cases> compute_aggregates(const std::vector<TrialRecord> &trials, const Truth &truth);

    RunReport run_scenario(const ScenarioConfig &cfg);

    std::string trials_to_json(const RunReport &report);
    std::string summary_to_json(const RunReport &report);
    std::string surface_to_csv(const SurfaceTable &table);

    // Writes surfaces_{angle,delay,doppler}.csv, trials.json and summary.json (plus optional extras)
    // into dir. Returns the written paths.
    std::vector<std::filesystem::path> emit_reports(const RunReport &report, const std::filesystem::path &dir);
}

#endif
