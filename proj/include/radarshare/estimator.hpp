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

#ifndef RADARSHARE_ESTIMATOR_HPP
#define RADARSHARE_ESTIMATOR_HPP

#include "radarshare/array_geometry.hpp"
#include "radarshare/echo.hpp"
#include "radarshare/waveform.hpp"

#include <vector>

namespace radarshare
{
    // Grid points where a_T^H R^T a_T falls below this fraction of trace(R) are excluded.
    inline constexpr double denominator_guard = 1e-12;

    enum class Axis
    {
        angle,
        delay,
        doppler,
    };

    const char *axis_name(Axis axis);

    struct EstimationGrid
    {
        std::vector<double> angle;          // [rad]
        std::vector<Eigen::Index> delay;    // [samples]
        std::vector<double> doppler;        // [Hz]
    };

    // Throws invalid_argument unless the values are non-empty and strictly increasing.
    void validate_axis(const std::vector<double> &values, const char *what);
    void validate_axis(const std::vector<Eigen::Index> &values, const char *what);

    struct ObjectiveSurface
    {
        Axis axis = Axis::angle;
        std::vector<double> grid;                 // angle [rad], delay [samples], doppler [Hz]
        std::vector<double> objective;            // 0 at excluded points
        std::vector<std::size_t> excluded;        // indices skipped by the denominator guard
        std::size_t argmax = 0;

        double peak() const { return objective[argmax]; }
    };

    struct EstimationResult
    {
        double theta_hat = 0.0;       // [rad]
        Eigen::Index delay_hat = 0;   // [samples]
        double doppler_hat = 0.0;     // [Hz]
        ObjectiveSurface surface;
    };

    // E = T_s sum_{n >= delay} y[n] xref[:, n - delay]^H exp(+j 2 pi doppler n T_s),  M_R x M_T.
    ComplexMatrix cross_ambiguity(const ReceivedEcho &y, const WaveformMatrix &xref, Eigen::Index delay,
                                  double doppler_hz);

    // |a_R^H E a_T^*|^2 / (M_R a_T^H R^T a_T). Throws degenerate_denominator when the transmit energy
    // along a_T(theta) vanishes.
    double ml_objective(const ComplexMatrix &e, const ComplexMatrix &r, const ArrayConfig &cfg, double theta);

    // Orthogonal-waveform form |a_R^H E a_T^*|^2 / (M_R M_T T_0), valid when R = T_0 I.
    double ml_objective_orthogonal(const ComplexMatrix &e, const ArrayConfig &cfg, double theta, double t0);

    // Each estimator sweeps one axis with the other two parameters held at their known values.
    // Ties go to the smallest grid index. All three throw degenerate_denominator when every grid point
    // is excluded.
    EstimationResult estimate_angle(const ReceivedEcho &y, const WaveformMatrix &xref, Eigen::Index true_delay,
                                    double true_doppler_hz, const std::vector<double> &angle_grid,
                                    const ArrayConfig &cfg);

    EstimationResult estimate_delay(const ReceivedEcho &y, const WaveformMatrix &xref, double true_theta,
                                    double true_doppler_hz, const std::vector<Eigen::Index> &delay_grid,
                                    const ArrayConfig &cfg);

    EstimationResult estimate_doppler(const ReceivedEcho &y, const WaveformMatrix &xref, double true_theta,
                                      Eigen::Index true_delay, const std::vector<double> &doppler_grid,
                                      const ArrayConfig &cfg);
}

#endif
