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

#include "radarshare/array_geometry.hpp"

#include <cmath>

namespace radarshare
{
    void ArrayConfig::validate() const
    {
        require(num_tx >= 1, "array.num_tx must be >= 1");
        require(num_rx >= 1, "array.num_rx must be >= 1");
        require(std::isfinite(element_spacing) && element_spacing > 0.0, "array.element_spacing must be > 0");
        require(std::isfinite(carrier_freq) && carrier_freq > 0.0, "array.carrier_freq must be > 0");
        require(std::isfinite(propagation_speed) && propagation_speed > 0.0, "array.propagation_speed must be > 0");
    }

    double element_delay(const ArrayConfig &cfg, int element, double theta)
    {
        return static_cast<double>(element) * cfg.element_spacing * std::sin(theta) / cfg.propagation_speed;
    }

    namespace
    {
        ComplexVector ula_steering(const ArrayConfig &cfg, int n, double theta)
        {
            const double wc = cfg.carrier_angular_freq();
            ComplexVector a(n);
            for (int k = 0; k < n; ++k)
                a(k) = std::polar(1.0, -wc * element_delay(cfg, k, theta));
            return a;
        }
    }

    ComplexVector tx_steering(const ArrayConfig &cfg, double theta)
    {
        return ula_steering(cfg, cfg.num_tx, theta);
    }

    ComplexVector rx_steering(const ArrayConfig &cfg, double theta)
    {
        return ula_steering(cfg, cfg.num_rx, theta);
    }

    ComplexMatrix steering_matrix(const ArrayConfig &cfg, double theta)
    {
        return rx_steering(cfg, theta) * tx_steering(cfg, theta).transpose();
    }
}
