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
#include "radarshare/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace radarshare
{
    using nlohmann::json;

    namespace
    {
        [[noreturn]] void invalid(const std::string &path, const std::string &msg)
        {
            fail(ErrorCode::validation_error, path + ": " + msg);
        }

        // Reads one section, rejecting unknown keys.
        class SectionReader
        {
        public:
            SectionReader(const json &obj, std::string name, std::set<std::string> allowed)
                : obj_(obj), name_(std::move(name))
            {
                if (!obj_.is_object())
                    invalid(name_, "must be an object");
                for (const auto &item : obj_.items())
                    if (!allowed.count(item.key()))
                        invalid(name_ + "." + item.key(), "unknown key");
            }

            template <typename T>
            void get(const char *key, T &out) const
            {
                if (!obj_.contains(key))
                    return;
                const std::string path = name_ + "." + key;
                const json &v = obj_.at(key);
                try
                {
                    if constexpr (std::is_same_v<T, bool>)
                    {
                        if (!v.is_boolean())
                            invalid(path, "expected a boolean");
                    }
                    else if constexpr (std::is_integral_v<T>)
                    {
                        if (!v.is_number_integer())
                            invalid(path, "expected an integer");
                        if constexpr (std::is_unsigned_v<T>)
                            if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)
                                invalid(path, "expected a non-negative integer");
                    }
                    else if constexpr (std::is_floating_point_v<T>)
                    {
                        if (!v.is_number())
                            invalid(path, "expected a number");
                    }
                    out = v.get<T>();
                }
                catch (const json::exception &e)
                {
                    invalid(path, e.what());
                }
            }

            void get_seed(const char *key, std::optional<std::uint64_t> &out) const
            {
                if (!obj_.contains(key))
                    return;
                std::uint64_t s = 0;
                get(key, s);
                out = s;
            }

            const json &raw(const char *key) const { return obj_.at(key); }
            bool has(const char *key) const { return obj_.contains(key); }
            const std::string &name() const { return name_; }

        private:
            const json &obj_;
            std::string name_;
        };
    }

    Eigen::Index WaveformSection::num_samples() const
    {
        return static_cast<Eigen::Index>(std::llround(observation_time * bandwidth));
    }

    void ScenarioConfig::validate() const
    {
        auto check = [](bool cond, const char *path, const char *msg) {
            if (!cond)
                invalid(path, msg);
        };
        check(array.num_tx >= 1, "array.num_tx", "must be >= 1");
        check(array.num_rx >= 1, "array.num_rx", "must be >= 1");
        check(std::isfinite(array.element_spacing) && array.element_spacing > 0, "array.element_spacing_m", "must be > 0");
        check(std::isfinite(array.carrier_freq) && array.carrier_freq > 0, "array.carrier_freq_hz", "must be > 0");
        check(std::isfinite(array.propagation_speed) && array.propagation_speed > 0, "array.propagation_speed_mps", "must be > 0");

        check(std::isfinite(waveform.bandwidth) && waveform.bandwidth > 0, "waveform.bandwidth_hz", "must be > 0");
        check(std::isfinite(waveform.observation_time) && waveform.observation_time > 0, "waveform.observation_time_s", "must be > 0");
        check(waveform.num_samples() >= array.num_tx, "waveform.observation_time_s",
              "bandwidth * observation time must give at least num_tx samples");

        check(!channels.rx_antennas_per_bs.empty(), "channels.rx_antennas_per_bs", "must list at least one BS");
        for (int n : channels.rx_antennas_per_bs)
            check(n >= 1, "channels.rx_antennas_per_bs", "every entry must be >= 1");
        check(std::isfinite(channels.csi_error_std) && channels.csi_error_std >= 0, "channels.csi_error_std", "must be >= 0");

        check(std::isfinite(scene.angle) && std::abs(scene.angle) <= pi / 2 + 1e-12, "scene.angle_deg", "must lie in [-90, 90]");
        check(std::isfinite(scene.range) && scene.range > 0, "scene.range_m", "must be > 0");
        check(std::isfinite(scene.radial_velocity), "scene.radial_velocity_mps", "must be finite");
        check(std::isfinite(scene.reflection_magnitude) && scene.reflection_magnitude > 0, "scene.reflection_magnitude",
              "must be > 0");
        check(scene.delay_samples(array, waveform.bandwidth) < waveform.num_samples(), "scene.range_m",
              "target delay falls outside the observation window");

        check(noise.noiseless || std::isfinite(noise.snr_db), "noise.snr_db", "must be finite");

        check(std::isfinite(grids.angle_step_deg) && grids.angle_step_deg > 0, "grids.angle_step_deg", "must be > 0");
        check(grids.angle_start_deg >= -90 && grids.angle_stop_deg <= 90 && grids.angle_start_deg <= grids.angle_stop_deg,
              "grids.angle_start_deg", "angle grid must satisfy -90 <= start <= stop <= 90");
        check(grids.delay_half_width >= 0, "grids.delay_half_width", "must be >= 0");
        check(std::isfinite(grids.doppler_step_hz) && grids.doppler_step_hz > 0, "grids.doppler_step_hz", "must be > 0");
        check(std::isfinite(grids.doppler_start_hz) && std::isfinite(grids.doppler_stop_hz) &&
                  grids.doppler_start_hz <= grids.doppler_stop_hz,
              "grids.doppler_start_hz", "doppler grid must satisfy start <= stop");

        check(trials >= 1, "run.trials", "must be >= 1");
        check(std::isfinite(rank_tolerance) && rank_tolerance >= 0, "run.rank_tolerance", "must be >= 0");
        check(!output_dir.empty(), "run.output_dir", "must not be empty");
    }

    ScenarioConfig parse_config(const std::string &text)
    {
        json doc;
        bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
        if (blank)
            doc = json::object();
        else
        {
            try
            {
                doc = json::parse(text);
            }
            catch (const json::parse_error &e)
            {
                fail(ErrorCode::parse_error, std::string("config: ") + e.what());
            }
        }
        if (!doc.is_object())
            invalid("<root>", "config must be a JSON object");

        static const std::set<std::string> sections{"array", "waveform", "channels", "scene", "noise", "grids", "run"};
        for (const auto &item : doc.items())
            if (!sections.count(item.key()))
                invalid(item.key(), "unknown section");
        if (!doc.contains("array"))
            invalid("array", "section is required");

        ScenarioConfig cfg;
        {
            SectionReader r(doc["array"], "array",
                            {"num_tx", "num_rx", "element_spacing_m", "carrier_freq_hz", "propagation_speed_mps"});
            r.get("num_tx", cfg.array.num_tx);
            r.get("num_rx", cfg.array.num_rx);
            r.get("element_spacing_m", cfg.array.element_spacing);
            r.get("carrier_freq_hz", cfg.array.carrier_freq);
            r.get("propagation_speed_mps", cfg.array.propagation_speed);
        }
        if (doc.contains("waveform"))
        {
            SectionReader r(doc["waveform"], "waveform", {"family", "bandwidth_hz", "observation_time_s", "seed"});
            std::string family = "orthogonal";
            r.get("family", family);
            if (family == "orthogonal")
                cfg.waveform.family = WaveformFamily::orthogonal;
            else if (family == "random")
                cfg.waveform.family = WaveformFamily::random;
            else
                invalid("waveform.family", "must be \"orthogonal\" or \"random\"");
            r.get("bandwidth_hz", cfg.waveform.bandwidth);
            r.get("observation_time_s", cfg.waveform.observation_time);
            r.get_seed("seed", cfg.waveform.seed);
        }
        if (doc.contains("channels"))
        {
            SectionReader r(doc["channels"], "channels", {"rx_antennas_per_bs", "csi_error_std", "seed"});
            if (r.has("rx_antennas_per_bs"))
            {
                const json &list = r.raw("rx_antennas_per_bs");
                if (!list.is_array())
                    invalid("channels.rx_antennas_per_bs", "expected an array of integers");
                cfg.channels.rx_antennas_per_bs.clear();
                for (std::size_t i = 0; i < list.size(); ++i)
                {
                    if (!list[i].is_number_integer())
                        invalid("channels.rx_antennas_per_bs[" + std::to_string(i) + "]", "expected an integer");
                    cfg.channels.rx_antennas_per_bs.push_back(list[i].get<int>());
                }
            }
            r.get("csi_error_std", cfg.channels.csi_error_std);
            r.get_seed("seed", cfg.channels.seed);
        }
        if (doc.contains("scene"))
        {
            SectionReader r(doc["scene"], "scene", {"angle_deg", "range_m", "radial_velocity_mps", "reflection_magnitude"});
            double angle_deg = 0.0;
            r.get("angle_deg", angle_deg);
            cfg.scene.angle = deg_to_rad(angle_deg);
            r.get("range_m", cfg.scene.range);
            r.get("radial_velocity_mps", cfg.scene.radial_velocity);
            r.get("reflection_magnitude", cfg.scene.reflection_magnitude);
        }
        if (doc.contains("noise"))
        {
            SectionReader r(doc["noise"], "noise", {"noiseless", "snr_db", "seed"});
            r.get("noiseless", cfg.noise.noiseless);
            r.get("snr_db", cfg.noise.snr_db);
            r.get_seed("seed", cfg.noise.seed);
        }
        if (doc.contains("grids"))
        {
            SectionReader r(doc["grids"], "grids",
                            {"angle_start_deg", "angle_stop_deg", "angle_step_deg", "delay_mode", "delay_half_width",
                             "doppler_start_hz", "doppler_stop_hz", "doppler_step_hz"});
            r.get("angle_start_deg", cfg.grids.angle_start_deg);
            r.get("angle_stop_deg", cfg.grids.angle_stop_deg);
            r.get("angle_step_deg", cfg.grids.angle_step_deg);
            std::string mode = "full";
            r.get("delay_mode", mode);
            if (mode == "full")
                cfg.grids.delay_mode = DelayGridMode::full;
            else if (mode == "window")
                cfg.grids.delay_mode = DelayGridMode::window;
            else
                invalid("grids.delay_mode", "must be \"full\" or \"window\"");
            r.get("delay_half_width", cfg.grids.delay_half_width);
            r.get("doppler_start_hz", cfg.grids.doppler_start_hz);
            r.get("doppler_stop_hz", cfg.grids.doppler_stop_hz);
            r.get("doppler_step_hz", cfg.grids.doppler_step_hz);
        }
        if (doc.contains("run"))
        {
            SectionReader r(doc["run"], "run",
                            {"trials", "seed", "rank_tolerance", "output_dir", "per_trial_surfaces", "dump_waveform"});
            r.get("trials", cfg.trials);
            r.get("seed", cfg.seed);
            r.get("rank_tolerance", cfg.rank_tolerance);
            r.get("output_dir", cfg.output_dir);
            r.get("per_trial_surfaces", cfg.per_trial_surfaces);
            r.get("dump_waveform", cfg.dump_waveform);
        }
        cfg.validate();
        return cfg;
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            fail(ErrorCode::io_error, "cannot open config file: " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string config_to_json(const ScenarioConfig &cfg)
    {
        nlohmann::ordered_json doc;
        doc["array"] = {{"num_tx", cfg.array.num_tx},
                        {"num_rx", cfg.array.num_rx},
                        {"element_spacing_m", cfg.array.element_spacing},
                        {"carrier_freq_hz", cfg.array.carrier_freq},
                        {"propagation_speed_mps", cfg.array.propagation_speed}};
        doc["waveform"] = {{"family", cfg.waveform.family == WaveformFamily::orthogonal ? "orthogonal" : "random"},
                           {"bandwidth_hz", cfg.waveform.bandwidth},
                           {"observation_time_s", cfg.waveform.observation_time}};
        if (cfg.waveform.seed)
            doc["waveform"]["seed"] = *cfg.waveform.seed;
        doc["channels"] = {{"rx_antennas_per_bs", cfg.channels.rx_antennas_per_bs},
                           {"csi_error_std", cfg.channels.csi_error_std}};
        if (cfg.channels.seed)
            doc["channels"]["seed"] = *cfg.channels.seed;
        doc["scene"] = {{"angle_deg", rad_to_deg(cfg.scene.angle)},
                        {"range_m", cfg.scene.range},
                        {"radial_velocity_mps", cfg.scene.radial_velocity},
                        {"reflection_magnitude", cfg.scene.reflection_magnitude}};
        doc["noise"] = {{"noiseless", cfg.noise.noiseless}, {"snr_db", cfg.noise.snr_db}};
        if (cfg.noise.seed)
            doc["noise"]["seed"] = *cfg.noise.seed;
        doc["grids"] = {{"angle_start_deg", cfg.grids.angle_start_deg},
                        {"angle_stop_deg", cfg.grids.angle_stop_deg},
                        {"angle_step_deg", cfg.grids.angle_step_deg},
                        {"delay_mode", cfg.grids.delay_mode == DelayGridMode::full ? "full" : "window"},
                        {"delay_half_width", cfg.grids.delay_half_width},
                        {"doppler_start_hz", cfg.grids.doppler_start_hz},
                        {"doppler_stop_hz", cfg.grids.doppler_stop_hz},
                        {"doppler_step_hz", cfg.grids.doppler_step_hz}};
        doc["run"] = {{"trials", cfg.trials},
                      {"seed", cfg.seed},
                      {"rank_tolerance", cfg.rank_tolerance},
                      {"output_dir", cfg.output_dir},
                      {"per_trial_surfaces", cfg.per_trial_surfaces},
                      {"dump_waveform", cfg.dump_waveform}};
        return doc.dump(2) + "\n";
    }

    namespace
    {
        // start + i * step, snapped to 1e-9 so that e.g. 0 and 20 land exactly on the grid.
        std::vector<double> uniform_axis(double start, double stop, double step)
        {
            const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
            std::vector<double> v(count);
            for (std::size_t i = 0; i < count; ++i)
                v[i] = std::round((start + static_cast<double>(i) * step) * 1e9) / 1e9;
            return v;
        }
    }

    EstimationGrid build_grid(const ScenarioConfig &cfg)
    {
        EstimationGrid g;
        for (double deg : uniform_axis(cfg.grids.angle_start_deg, cfg.grids.angle_stop_deg, cfg.grids.angle_step_deg))
            g.angle.push_back(deg_to_rad(deg));

        const Eigen::Index n = cfg.waveform.num_samples();
        Eigen::Index lo = 0, hi = n - 1;
        if (cfg.grids.delay_mode == DelayGridMode::window)
        {
            const Eigen::Index d = cfg.scene.delay_samples(cfg.array, cfg.waveform.bandwidth);
            lo = std::max<Eigen::Index>(0, d - cfg.grids.delay_half_width);
            hi = std::min<Eigen::Index>(n - 1, d + cfg.grids.delay_half_width);
        }
        for (Eigen::Index d = lo; d <= hi; ++d)
            g.delay.push_back(d);

        g.doppler = uniform_axis(cfg.grids.doppler_start_hz, cfg.grids.doppler_stop_hz, cfg.grids.doppler_step_hz);
        return g;
    }

    std::uint64_t waveform_seed(const ScenarioConfig &cfg)
    {
        return derive_seed(cfg.waveform.seed.value_or(cfg.seed), SeedStream::waveform, 0);
    }

    std::uint64_t channel_seed(const ScenarioConfig &cfg, int trial)
    {
        return derive_seed(cfg.channels.seed.value_or(cfg.seed), SeedStream::channels, static_cast<std::uint64_t>(trial));
    }

    std::uint64_t csi_seed(const ScenarioConfig &cfg, int trial)
    {
        return derive_seed(cfg.channels.seed.value_or(cfg.seed), SeedStream::csi_error, static_cast<std::uint64_t>(trial));
    }

    std::uint64_t noise_seed(const ScenarioConfig &cfg, int trial, int waveform_case)
    {
        const auto counter = static_cast<std::uint64_t>(trial) * num_cases + static_cast<std::uint64_t>(waveform_case);
        return derive_seed(cfg.noise.seed.value_or(cfg.seed), SeedStream::noise, counter);
    }
}
