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

#include "radarshare/nullspace.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace radarshare
{
    ChannelSvd channel_svd(const ComplexMatrix &h)
    {
        require(h.rows() >= 1 && h.cols() >= 1, "channel_svd: empty channel matrix");
        require(all_finite(h), "channel_svd: non-finite channel entry");

        Eigen::JacobiSVD<ComplexMatrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
        return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
    }

    int numerical_rank(const RealVector &singular_values, double tol)
    {
        require(std::isfinite(tol) && tol >= 0.0, "rank tolerance must be finite and >= 0");
        if (singular_values.size() == 0)
            return 0;
        const double threshold = tol * singular_values.maxCoeff();
        int k = 0;
        for (Eigen::Index i = 0; i < singular_values.size(); ++i)
            if (singular_values(i) > threshold)
                ++k;
        return k;
    }

    RealVector sigma_prime(const RealVector &singular_values, int num_tx, double tol)
    {
        require(singular_values.size() <= num_tx, "sigma_prime: more singular values than transmit antennas");
        const int k = numerical_rank(singular_values, tol);
        RealVector diag = RealVector::Ones(num_tx);
        diag.head(k).setZero();
        return diag;
    }

    Projector projection_matrix(const ComplexMatrix &h, double tol)
    {
        const ChannelSvd svd = channel_svd(h);
        const int num_tx = static_cast<int>(h.cols());
        const RealVector diag = sigma_prime(svd.singular, num_tx, tol);

        Projector p;
        p.rank_tolerance = tol;
        p.channel_rank = numerical_rank(svd.singular, tol);
        p.null_dim = num_tx - p.channel_rank;
        if (p.null_dim == 0)
        {
            p.matrix = ComplexMatrix::Zero(num_tx, num_tx);
            return p;
        }
        const ComplexMatrix m = svd.v * diag.asDiagonal() * svd.v.adjoint();
        p.matrix = (m + m.adjoint()) * 0.5;
        return p;
    }

    WaveformMatrix project_waveform(const Projector &p, const WaveformMatrix &x)
    {
        require(p.dim() == x.num_tx(), "project_waveform: projector dimension differs from waveform row count");
        return {p.matrix * x.samples, x.sample_rate};
    }
}
