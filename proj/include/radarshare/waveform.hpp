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

#ifndef RADARSHARE_WAVEFORM_HPP
#define RADARSHARE_WAVEFORM_HPP

#include "radarshare/types.hpp"

#include <cstdint>

namespace radarshare
{
    enum class WaveformFamily
    {
        orthogonal, // exactly orthogonal equal-power rows, X X^H = N I
        random,     // i.i.d. complex Gaussian rows normalized to unit average power
    };

    // M_T x N complex baseband samples at sample_rate (T_s = 1 / sample_rate).
    struct WaveformMatrix
    {
        ComplexMatrix samples;
        double sample_rate = 1.0;

        Eigen::Index num_tx() const { return samples.rows(); }
        Eigen::Index num_samples() const { return samples.cols(); }
        double sample_period() const { return 1.0 / sample_rate; }
        double duration() const { return static_cast<double>(samples.cols()) / sample_rate; }
    };

    // Orthogonal family: an M_T-point DFT spreading code applied block-wise over a seeded
    // unit-modulus chip sequence, x_k[b M_T + j] = c_b exp(j 2 pi k j / M_T). When N is not a
    // multiple of M_T the rows are re-orthonormalized (symmetric/Loewdin) to restore X X^H = N I.
    WaveformMatrix generate_orthogonal(int num_tx, Eigen::Index num_samples, std::uint64_t seed,
                                       double sample_rate = 1.0);

    WaveformMatrix generate_random(int num_tx, Eigen::Index num_samples, std::uint64_t seed,
                                   double sample_rate = 1.0);

    WaveformMatrix generate_waveform(WaveformFamily family, int num_tx, Eigen::Index num_samples,
                                     std::uint64_t seed, double sample_rate = 1.0);

    // R = T_s sum_n x[n] x[n]^H
    ComplexMatrix correlation_matrix(const WaveformMatrix &x);

    // Columns shifted right by delay_samples, zero-filled at the start.
    WaveformMatrix delay_shift(const WaveformMatrix &x, Eigen::Index delay_samples);
}

#endif
