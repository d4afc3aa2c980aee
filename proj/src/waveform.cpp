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

#include "radarshare/waveform.hpp"
#include "radarshare/rng.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

namespace radarshare
{
    namespace
    {
        void check_dims(int num_tx, Eigen::Index num_samples, double sample_rate)
        {
            require(num_tx >= 1, "waveform: num_tx must be >= 1");
            require(num_samples >= num_tx, "waveform: num_samples must be >= num_tx for orthogonal rows");
            require(std::isfinite(sample_rate) && sample_rate > 0.0, "waveform: sample_rate must be > 0");
        }

        // X <- (X X^H / N)^{-1/2} X
        void symmetric_orthonormalize(ComplexMatrix &x)
        {
            const double n = static_cast<double>(x.cols());
            const ComplexMatrix gram = (x * x.adjoint()) / n;
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
            const RealVector inv_sqrt = eig.eigenvalues().cwiseSqrt().cwiseInverse();
            const ComplexMatrix w = eig.eigenvectors() * inv_sqrt.asDiagonal() * eig.eigenvectors().adjoint();
            x = w * x;
        }
    }

    WaveformMatrix generate_orthogonal(int num_tx, Eigen::Index num_samples, std::uint64_t seed, double sample_rate)
    {
        check_dims(num_tx, num_samples, sample_rate);

        Rng rng(seed);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * pi);

        WaveformMatrix w{ComplexMatrix(num_tx, num_samples), sample_rate};
        Complex chip{1.0, 0.0};
        for (Eigen::Index n = 0; n < num_samples; ++n)
        {
            const Eigen::Index j = n % num_tx;
            if (j == 0)
                chip = std::polar(1.0, phase(rng));
            for (int k = 0; k < num_tx; ++k)
            {
                const double arg = 2.0 * pi * static_cast<double>((static_cast<Eigen::Index>(k) * j) % num_tx) / num_tx;
                w.samples(k, n) = chip * std::polar(1.0, arg);
            }
        }
        if (num_samples % num_tx != 0)
            symmetric_orthonormalize(w.samples);
        return w;
    }

    WaveformMatrix generate_random(int num_tx, Eigen::Index num_samples, std::uint64_t seed, double sample_rate)
    {
        check_dims(num_tx, num_samples, sample_rate);

        Rng rng(seed);
        WaveformMatrix w{ComplexMatrix(num_tx, num_samples), sample_rate};
        for (int k = 0; k < num_tx; ++k)
        {
            for (Eigen::Index n = 0; n < num_samples; ++n)
                w.samples(k, n) = complex_gaussian(rng, 1.0);
            const double row_power = w.samples.row(k).squaredNorm() / static_cast<double>(num_samples);
            w.samples.row(k) /= std::sqrt(row_power);
        }
        return w;
    }

    WaveformMatrix generate_waveform(WaveformFamily family, int num_tx, Eigen::Index num_samples,
                                     std::uint64_t seed, double sample_rate)
    {
        return family == WaveformFamily::orthogonal ? generate_orthogonal(num_tx, num_samples, seed, sample_rate)
                                                    : generate_random(num_tx, num_samples, seed, sample_rate);
    }

    ComplexMatrix correlation_matrix(const WaveformMatrix &x)
    {
        ComplexMatrix r = x.sample_period() * (x.samples * x.samples.adjoint());
        // Exact Hermitian symmetry; the product is Hermitian up to rounding.
        return (r + r.adjoint()) * 0.5;
    }

    WaveformMatrix delay_shift(const WaveformMatrix &x, Eigen::Index delay_samples)
    {
        const Eigen::Index n = x.num_samples();
        require(delay_samples >= 0 && delay_samples < n, "delay_shift: delay must lie in [0, N)");
        WaveformMatrix out{ComplexMatrix::Zero(x.num_tx(), n), x.sample_rate};
        out.samples.rightCols(n - delay_samples) = x.samples.leftCols(n - delay_samples);
        return out;
    }
}
