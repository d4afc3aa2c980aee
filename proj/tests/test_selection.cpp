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

#include "radarshare/selection.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace radarshare;

namespace
{
    // Snapshot-by-snapshot loss, sqrt(sum_n ||(I - P) x[n]||^2).
    double brute_loss(const WaveformMatrix &x, const ComplexMatrix &p)
    {
        double acc = 0.0;
        for (Eigen::Index n = 0; n < x.num_samples(); ++n)
        {
            const ComplexVector col = x.samples.col(n);
            acc += (col - p * col).squaredNorm();
        }
        return std::sqrt(acc);
    }
}

TEST_CASE("selection - projection_loss examples")
{
    const auto x = generate_orthogonal(10, 1000, 2);

    Projector id;
    id.matrix = ComplexMatrix::Identity(10, 10);
    CHECK(projection_loss(x, id) == Catch::Approx(0.0).margin(1e-12));

    Projector zero;
    zero.matrix = ComplexMatrix::Zero(10, 10);
    CHECK(projection_loss(x, zero) == Catch::Approx(std::sqrt(10.0 * 1000.0)).epsilon(1e-12));

    // loss^2 = trace((I - P) X X^H) = N k
    for (int rows = 1; rows <= 9; ++rows)
    {
        const auto p = projection_matrix(rstest::random_matrix(rows, 10, 40 + rows));
        const double loss = projection_loss(x, p);
        const double brute = brute_loss(x, p.matrix);
        CHECK(std::abs(loss * loss - 1000.0 * rows) < 1e-6 * 1000.0 * rows);
        CHECK(std::abs(brute * brute - 1000.0 * rows) < 1e-6 * 1000.0 * rows);
    }

    Projector wrong;
    wrong.matrix = ComplexMatrix::Identity(3, 3);
    CHECK_THROWS_AS(projection_loss(x, wrong), Error);
}

TEST_CASE("selection - single channel and antenna-count ordering")
{
    const auto x = generate_orthogonal(10, 1000, 3);

    const auto one = sample_channel_set(10, {5}, 1);
    const auto r1 = select_channels(x, one);
    CHECK(r1.best_index == 0);
    CHECK(r1.worst_index == 0);

    const auto two = sample_channel_set(10, {8, 2}, 2);
    const auto r2 = select_channels(x, two);
    CHECK(r2.best_index == 1);
    CHECK(r2.worst_index == 0);
    CHECK(r2.losses[1] * r2.losses[1] == Catch::Approx(2000.0).epsilon(1e-6));
    CHECK(r2.losses[0] * r2.losses[0] == Catch::Approx(8000.0).epsilon(1e-6));
    CHECK(r2.best_projector().null_dim == 8);
    CHECK(r2.worst_projector().null_dim == 2);
}

TEST_CASE("selection - matches a brute-force scan with lowest-id tie-break")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial)
    {
        const int nbs = 1 + static_cast<int>(rng() % 8);
        std::vector<int> counts;
        for (int i = 0; i < nbs; ++i)
            counts.push_back(1 + static_cast<int>(rng() % 9));
        const auto set = sample_channel_set(10, counts, rng());
        const auto x = trial % 2 ? generate_random(10, 200, rng()) : generate_orthogonal(10, 200, rng());

        const auto r = select_channels(x, set);

        std::vector<double> losses;
        for (const auto &h : set.channels)
        {
            Eigen::JacobiSVD<ComplexMatrix> svd(h.matrix, Eigen::ComputeFullV);
            const int k = numerical_rank(svd.singularValues(), default_rank_tolerance);
            const ComplexMatrix vn = svd.matrixV().rightCols(10 - k);
            losses.push_back(brute_loss(x, vn * vn.adjoint()));
        }
        const double lo = *std::min_element(losses.begin(), losses.end());
        const double hi = *std::max_element(losses.begin(), losses.end());
        std::size_t best = losses.size(), worst = losses.size();
        for (std::size_t i = 0; i < losses.size(); ++i)
        {
            if (best == losses.size() && losses[i] - lo <= 1e-9 * hi)
                best = i;
            if (worst == losses.size() && hi - losses[i] <= 1e-9 * hi)
                worst = i;
        }
        for (std::size_t i = 0; i < losses.size(); ++i)
            CHECK(std::abs(r.losses[i] - losses[i]) < 1e-9 * std::max(1.0, losses[i]));
        CHECK(r.best_index == best);
        CHECK(r.worst_index == worst);
    }
}

TEST_CASE("selection - rounding-level ties resolve to the lowest bs_id")
{
    // Equal antenna counts under an orthogonal waveform: losses differ only by rounding.
    const auto x = generate_orthogonal(10, 1000, 2);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        const auto r = select_channels(x, sample_channel_set(10, {4, 4, 4, 4}, seed));
        CHECK(r.best_index == 0);
        CHECK(r.worst_index == 0);
    }
    const auto mixed = select_channels(x, sample_channel_set(10, {5, 3, 5, 3}, 9));
    CHECK(mixed.best_index == 1);
    CHECK(mixed.worst_index == 0);
}

TEST_CASE("selection - exact ties resolve to the lowest bs_id")
{
    const auto x = generate_orthogonal(10, 100, 1);
    auto set = sample_channel_set(10, {3}, 4);
    set.channels.push_back({2, set.channels[0].matrix});
    set.channels.push_back({3, set.channels[0].matrix});
    const auto r = select_channels(x, set);
    CHECK(r.best_index == 0);
    CHECK(r.worst_index == 0);
}

TEST_CASE("selection - permutation moves the choice with the channel")
{
    const auto x = generate_random(10, 400, 6);
    const auto set = sample_channel_set(10, {3, 5, 2, 7}, 8);
    const auto r = select_channels(x, set);

    std::vector<std::size_t> perm{2, 0, 3, 1};
    ChannelSet permuted;
    for (std::size_t i = 0; i < perm.size(); ++i)
        permuted.channels.push_back({static_cast<int>(i) + 1, set.channels[perm[i]].matrix});
    const auto rp = select_channels(x, permuted);
    CHECK(perm[rp.best_index] == r.best_index);
    CHECK(perm[rp.worst_index] == r.worst_index);
}

TEST_CASE("selection - zero interference after projection onto the best channel")
{
    const auto x = generate_orthogonal(10, 2000, 10);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const auto set = sample_channel_set(10, {2, 4, 6, 8}, seed);
        const auto r = select_channels(x, set);
        const ComplexMatrix &h = set.channels[r.best_index].matrix;
        const auto px = project_waveform(r.best_projector(), x);
        CHECK((h * px.samples).norm() < 1e-9 * h.norm() * x.samples.norm());
    }
}

TEST_CASE("selection - degenerate channels")
{
    const auto x = generate_orthogonal(10, 100, 1);
    const auto all_bad = sample_channel_set(10, {10, 12}, 3);
    try
    {
        select_channels(x, all_bad);
        FAIL("expected no_usable_null_space");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::no_usable_null_space);
    }

    // One usable channel: the degenerate one is the worst with full energy loss.
    const auto mixed = sample_channel_set(10, {12, 4}, 3);
    const auto r = select_channels(x, mixed);
    CHECK(r.best_index == 1);
    CHECK(r.worst_index == 0);
    CHECK(r.losses[0] == Catch::Approx(std::sqrt(1000.0)).epsilon(1e-12));

    CHECK_THROWS_AS(select_channels(x, ChannelSet{}), Error);
    const auto narrow = sample_channel_set(4, {2}, 3);
    CHECK_THROWS_AS(select_channels(x, narrow), Error);
}
