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

#ifndef RADARSHARE_ECHO_HPP
#define RADARSHARE_ECHO_HPP

#include "radarshare/array_geometry.hpp"
#include "radarshare/waveform.hpp"

#include <cstdint>

namespace radarshare
{
    // Single point target.
    struct TargetScene
    {
        double angle = 0.0;                // theta [rad] from broadside
        double range = 5000.0;             // r_0 [m]
        double radial_velocity = 2000.0;   // v_r [m/s]
        double reflection_magnitude = 1.0; // |alpha_ji|

        double delay(const ArrayConfig &cfg) const { return 2.0 * range / cfg.propagation_speed; }
        // omega_D = 2 omega_c v_r / c  [rad/s]
        double doppler_angular(const ArrayConfig &cfg) const
        {
            return 2.0 * cfg.carrier_angular_freq() * radial_velocity / cfg.propagation_speed;
        }
        // f_d = 2 v_r / lambda  [Hz]
        double doppler_hz(const ArrayConfig &cfg) const { return doppler_angular(cfg) / (2.0 * pi); }

        // Integer-sample delay, round(tau_r * B).
        Eigen::Index delay_samples(const ArrayConfig &cfg, double sample_rate) const;

        void validate() const;
    };

    struct ReceivedEcho
    {
        ComplexMatrix samples; // M_R x N
        double sample_rate = 1.0;

        double sample_period() const { return 1.0 / sample_rate; }
        Eigen::Index num_samples() const { return samples.cols(); }
    };

    // |alpha_ji| exp(-j omega_c tau_r)
    Complex path_loss_alpha(const TargetScene &scene, const ArrayConfig &cfg);

    // y[n] = alpha exp(-j omega_D n T_s) A(theta) x[:, n - d], zero for n < d.
    ReceivedEcho synthesize_echo(const TargetScene &scene, const ArrayConfig &cfg, const WaveformMatrix &x);

    // Adds CN(0, sigma^2) noise to every entry, with sigma^2 chosen so that the mean signal power over
    // the nonzero-signal columns divided by sigma^2 equals 10^(snr_db / 10). snr_db = +inf is a no-op.
    ReceivedEcho add_noise(const ReceivedEcho &y, double snr_db, std::uint64_t seed);
}

#endif
