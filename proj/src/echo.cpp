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

#include "radarshare/echo.hpp"
#include "radarshare/rng.hpp"

#include <cmath>

namespace radarshare
{
    Eigen::Index TargetScene::delay_samples(const ArrayConfig &cfg, double sample_rate) const
    {
        return static_cast<Eigen::Index>(std::llround(delay(cfg) * sample_rate));
    }

    void TargetScene::validate() const
    {
        require(std::isfinite(angle) && std::abs(angle) <= pi / 2.0 + 1e-12, "scene.angle must lie in [-90, 90] deg");
        require(std::isfinite(range) && range > 0.0, "scene.range must be > 0");
        require(std::isfinite(radial_velocity), "scene.radial_velocity must be finite");
        require(std::isfinite(reflection_magnitude) && reflection_magnitude > 0.0, "scene.reflection_magnitude must be > 0");
    }

    Complex path_loss_alpha(const TargetScene &scene, const ArrayConfig &cfg)
    {
        return std::polar(scene.reflection_magnitude, -cfg.carrier_angular_freq() * scene.delay(cfg));
    }

    ReceivedEcho synthesize_echo(const TargetScene &scene, const ArrayConfig &cfg, const WaveformMatrix &x)
    {
        require(x.num_tx() == cfg.num_tx, "synthesize_echo: waveform rows must equal num_tx");
        const Eigen::Index n = x.num_samples();
        const Eigen::Index d = scene.delay_samples(cfg, x.sample_rate);
        require(d >= 0 && d < n, "synthesize_echo: target delay falls outside the observation window");

        const Complex alpha = path_loss_alpha(scene, cfg);
        const double wd = scene.doppler_angular(cfg);
        const double ts = x.sample_period();

        // A x = a_R (a_T^T x): beamform on transmit first, then spread over the receive array.
        const ComplexVector a_r = rx_steering(cfg, scene.angle);
        const Eigen::RowVectorXcd tx_beam = tx_steering(cfg, scene.angle).transpose() * x.samples;

        ReceivedEcho y{ComplexMatrix::Zero(cfg.num_rx, n), x.sample_rate};
        for (Eigen::Index col = d; col < n; ++col)
        {
            const Complex g = alpha * std::polar(1.0, -wd * static_cast<double>(col) * ts) * tx_beam(col - d);
            y.samples.col(col) = a_r * g;
        }
        return y;
    }

    ReceivedEcho add_noise(const ReceivedEcho &y, double snr_db, std::uint64_t seed)
    {
        require(!std::isnan(snr_db), "add_noise: snr must not be NaN");
        if (std::isinf(snr_db) && snr_db > 0.0)
            return y;
        require(std::isfinite(snr_db), "add_noise: snr must be finite or +inf");

        double energy = 0.0;
        Eigen::Index active = 0;
        for (Eigen::Index c = 0; c < y.samples.cols(); ++c)
        {
            const double e = y.samples.col(c).squaredNorm();
            if (e > 0.0)
            {
                energy += e;
                ++active;
            }
        }
        ReceivedEcho out = y;
        if (active == 0)
            return out;

        const double signal_power = energy / static_cast<double>(active * y.samples.rows());
        const double variance = signal_power / std::pow(10.0, snr_db / 10.0);
        Rng rng(seed);
        for (Eigen::Index c = 0; c < out.samples.cols(); ++c)
            for (Eigen::Index r = 0; r < out.samples.rows(); ++r)
                out.samples(r, c) += complex_gaussian(rng, variance);
        return out;
    }
}
