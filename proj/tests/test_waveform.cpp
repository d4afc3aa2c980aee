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

#include <catch2/catch_amalgamated.hpp>

#include "radarshare/waveform.hpp"
#include "test_util.hpp"

using namespace radarshare;

namespace
{
    double max_offdiag_over_n(const ComplexMatrix &x)
    {
        const ComplexMatrix g = x * x.adjoint();
        double worst = 0.0;
        for (Eigen::Index i = 0; i < g.rows(); ++i)
            for (Eigen::Index j = 0; j < g.cols(); ++j)
                if (i != j)
                    worst = std::max(worst, std::abs(g(i, j)));
        return worst / static_cast<double>(x.cols());
    }
}

TEST_CASE("waveform - orthogonal family has X X^H = N I")
{
    const auto x = generate_orthogonal(10, 10000, 42, 10e6);
    REQUIRE(x.num_tx() == 10);
    REQUIRE(x.num_samples() == 10000);
    CHECK(x.duration() == Catch::Approx(1e-3));

    const ComplexMatrix g = x.samples * x.samples.adjoint();
    CHECK((g - 10000.0 * ComplexMatrix::Identity(10, 10)).norm() < 1e-9 * 10000.0);
    CHECK(max_offdiag_over_n(x.samples) < 1e-9);
    for (Eigen::Index k = 0; k < 10; ++k)
        CHECK(std::abs(x.samples.row(k).squaredNorm() / 10000.0 - 1.0) < 1e-9);
}

TEST_CASE("waveform - orthogonality when N is not a multiple of M_T")
{
    for (Eigen::Index n : {10, 13, 97, 1001})
    {
        const auto x = generate_orthogonal(10, n, 5);
        CHECK(max_offdiag_over_n(x.samples) < 1e-9);
        for (Eigen::Index k = 0; k < 10; ++k)
            CHECK(std::abs(x.samples.row(k).squaredNorm() / static_cast<double>(n) - 1.0) < 1e-9);
    }
}

TEST_CASE("waveform - determinism and seed sensitivity")
{
    const auto a = generate_orthogonal(10, 500, 1);
    const auto b = generate_orthogonal(10, 500, 1);
    const auto c = generate_orthogonal(10, 500, 2);
    CHECK(a.samples == b.samples);
    CHECK((a.samples - c.samples).norm() > 1.0);

    const auto r1 = generate_random(4, 300, 9);
    const auto r2 = generate_random(4, 300, 9);
    CHECK(r1.samples == r2.samples);
    for (Eigen::Index k = 0; k < 4; ++k)
        CHECK(std::abs(r1.samples.row(k).squaredNorm() / 300.0 - 1.0) < 1e-9);
    // Random rows are not orthogonal.
    CHECK(max_offdiag_over_n(r1.samples) > 1e-3);
}

TEST_CASE("waveform - fewer samples than antennas is rejected")
{
    CHECK_THROWS_AS(generate_orthogonal(10, 9, 1), Error);
    CHECK_THROWS_AS(generate_random(10, 9, 1), Error);
    try
    {
        generate_orthogonal(10, 9, 1);
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }
}

TEST_CASE("waveform - correlation matrix")
{
    SECTION("orthonormal rows give T_0 I")
    {
        const auto x = generate_orthogonal(10, 10000, 3, 10e6);
        const ComplexMatrix r = correlation_matrix(x);
        CHECK((r - 1e-3 * ComplexMatrix::Identity(10, 10)).norm() < 1e-9 * 1e-3);
    }

    SECTION("matches a brute-force double loop and is Hermitian PSD")
    {
        WaveformMatrix x{rstest::random_matrix(5, 64, 11), 2.0};
        const ComplexMatrix r = correlation_matrix(x);
        for (int k = 0; k < 5; ++k)
            for (int m = 0; m < 5; ++m)
            {
                Complex acc{0.0, 0.0};
                for (int n = 0; n < 64; ++n)
                    acc += x.samples(k, n) * std::conj(x.samples(m, n));
                CHECK(std::abs(r(k, m) - acc * 0.5) < 1e-12 * std::max(1.0, std::abs(acc)));
            }
        CHECK((r - r.adjoint()).norm() < 1e-12 * r.norm());
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(r);
        CHECK(eig.eigenvalues().minCoeff() >= -1e-12);
    }
}

TEST_CASE("waveform - delay_shift")
{
    const auto x = generate_orthogonal(4, 40, 8);

    CHECK(delay_shift(x, 0).samples == x.samples);

    const auto s = delay_shift(x, 7);
    for (Eigen::Index n = 0; n < 40; ++n)
        for (Eigen::Index k = 0; k < 4; ++k)
            CHECK(s.samples(k, n) == (n >= 7 ? x.samples(k, n - 7) : Complex{0.0, 0.0}));

    const auto last = delay_shift(x, 39);
    CHECK(last.samples.leftCols(39).norm() == 0.0);
    CHECK(last.samples.col(39) == x.samples.col(0));

    CHECK_THROWS_AS(delay_shift(x, 40), Error);
    CHECK_THROWS_AS(delay_shift(x, -1), Error);
}

TEST_CASE("waveform - baseline delay snaps to 333 samples")
{
    // tau_r * B = 2 * 5000 / 3e8 * 10e6 = 333.33
    const double tau = 2.0 * 5000.0 / 3.0e8;
    const auto d = static_cast<Eigen::Index>(std::llround(tau * 10e6));
    CHECK(d == 333);
    const auto x = generate_orthogonal(10, 10000, 1, 10e6);
    const auto s = delay_shift(x, d);
    CHECK(s.samples.leftCols(333).norm() == 0.0);
    CHECK(s.samples.col(333) == x.samples.col(0));
}
