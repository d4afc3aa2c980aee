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

#ifndef RADARSHARE_NULLSPACE_HPP
#define RADARSHARE_NULLSPACE_HPP

#include "radarshare/channel.hpp"
#include "radarshare/waveform.hpp"

namespace radarshare
{
    inline constexpr double default_rank_tolerance = 1e-10;

    struct ChannelSvd
    {
        ComplexMatrix u;        // N_R x N_R unitary
        RealVector singular;    // min(N_R, M_T) values, nonincreasing
        ComplexMatrix v;        // M_T x M_T unitary
    };

    // Full SVD H = U Sigma V^H. Throws invalid_argument on non-finite entries.
    ChannelSvd channel_svd(const ComplexMatrix &h);
    inline ChannelSvd channel_svd(const InterferenceChannel &h) { return channel_svd(h.matrix); }

    // Number of singular values above tol * sigma_1.
    int numerical_rank(const RealVector &singular_values, double tol);

    // Diagonal of Sigma': k zeros followed by M_T - k ones, k = numerical_rank(...).
    RealVector sigma_prime(const RealVector &singular_values, int num_tx, double tol);

    // Orthogonal projector onto the null space of H, P = V Sigma' V^H.
    struct Projector
    {
        ComplexMatrix matrix;      // M_T x M_T, Hermitian, idempotent
        int channel_rank = 0;      // k
        int null_dim = 0;          // M_T - k
        double rank_tolerance = default_rank_tolerance;

        // Null space is {0}: the radar cannot transmit without reaching this BS. The matrix is zero.
        bool degenerate() const { return null_dim == 0; }
        Eigen::Index dim() const { return matrix.rows(); }
    };

    Projector projection_matrix(const ComplexMatrix &h, double tol = default_rank_tolerance);
    inline Projector projection_matrix(const InterferenceChannel &h, double tol = default_rank_tolerance)
    {
        return projection_matrix(h.matrix, tol);
    }

    // P X, applied to every time snapshot.
    WaveformMatrix project_waveform(const Projector &p, const WaveformMatrix &x);
}

#endif
