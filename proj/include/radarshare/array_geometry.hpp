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

#ifndef RADARSHARE_ARRAY_GEOMETRY_HPP
#define RADARSHARE_ARRAY_GEOMETRY_HPP

#include "radarshare/types.hpp"

namespace radarshare
{
    // Colocated uniform linear arrays. Tx and Rx share the same axis and the first element of
    // each array sits at the common phase reference. Angles are measured from broadside.
    struct ArrayConfig
    {
        int num_tx = 10;                      // M_T
        int num_rx = 7;                       // M_R
        double element_spacing = 0.0642;      // [m]
        double carrier_freq = 3.55e9;         // [Hz]
        double propagation_speed = 3.0e8;     // [m/s]

        double wavelength() const { return propagation_speed / carrier_freq; }
        double carrier_angular_freq() const { return 2.0 * pi * carrier_freq; }

        // Throws Error(invalid_argument) when a field is out of range.
        void validate() const;
    };

    // Element delay relative to the reference element, (k - 1) d sin(theta) / c with 0-based k here.
    double element_delay(const ArrayConfig &cfg, int element, double theta);

    ComplexVector tx_steering(const ArrayConfig &cfg, double theta);
    ComplexVector rx_steering(const ArrayConfig &cfg, double theta);

    // A(theta) = a_R(theta) a_T(theta)^T, size M_R x M_T.
    ComplexMatrix steering_matrix(const ArrayConfig &cfg, double theta);
}

#endif
