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

#include "radarshare/estimator.hpp"
#include "radarshare/nullspace.hpp"
#include "radarshare/selection.hpp"
#include "test_util.hpp"

using namespace radarshare;

namespace
{
    constexpr double B = 10e6;

    std::vector<double> angle_grid_deg(double start, double stop, double step)
    {
        std::vector<double> g;
        const int n = static_cast<int>(std::lround((stop - start) / step));
        for (int i = 0; i <= n; ++i)
            g.push_back(deg_to_rad(std::round((start + i * step) * 1e9) / 1e9));
        return g;
    }

    std::vector<Eigen::Index> delay_window(Eigen::Index lo, Eigen::Index hi)
    {
        std::vector<Eigen::Index> g;
        for (Eigen::Index d = lo; d <= hi; ++d)
            g.push_back(d);
        return g;
    }

    std::vector<double> doppler_grid(double start, double stop, double step)
    {
        std::vector<double> g;
        const int n = static_cast<int>(std::lround((stop - start) / step));
        for (int i = 0; i <= n; ++i)
            g.push_back(start + i * step);
        return g;
    }

    // Brute-force cross-ambiguity with explicit loops.
    ComplexMatrix brute_e(const ReceivedEcho &y, const WaveformMatrix &x, Eigen::Index d, double f)
    {
        const double ts = 1.0 / y.sample_rate;
        ComplexMatrix e = ComplexMatrix::Zero(y.samples.rows(), x.num_tx());
        for (Eigen::Index l = 0; l < e.rows(); ++l)
            for (Eigen::Index k = 0; k < e.cols(); ++k)
            {
                Complex acc{0.0, 0.0};
                for (Eigen::Index n = d; n < y.num_samples(); ++n)
                    acc += y.samples(l, n) * std::conj(x.samples(k, n - d)) *
                           std::exp(Complex(0.0, 2.0 * pi * f * n * ts));
                e(l, k) = acc * ts;
            }
        return e;
    }

    TargetScene baseline_scene() { return TargetScene{}; }
}

TEST_CASE("estimator - cross_ambiguity")
{
    const ArrayConfig cfg;

    SECTION("matched static broadside echo gives alpha T_0 A(0)")
    {
        const auto x = generate_orthogonal(10, 10000, 1, B);
        TargetScene s;
        s.range = 1.0;
        s.radial_velocity = 0.0;
        const auto y = synthesize_echo(s, cfg, x);
        const ComplexMatrix e = cross_ambiguity(y, x, 0, 0.0);
        const Complex alpha = path_loss_alpha(s, cfg);
        CHECK((e - alpha * 1e-3 * ComplexMatrix::Ones(7, 10)).norm() < 1e-9 * 1e-3);
        for (Eigen::Index i = 0; i < e.size(); ++i)
            CHECK(std::abs(e(i)) == Catch::Approx(1e-3).epsilon(1e-9));
    }

    SECTION("agrees with the brute-force sum")
    {
        ArrayConfig small = cfg;
        small.num_tx = 4;
        small.num_rx = 3;
        const auto x = generate_random(4, 300, 2, B);
        TargetScene s;
        s.range = 450.0; // 30 samples
        s.radial_velocity = 300.0;
        s.angle = deg_to_rad(12.0);
        const auto y = synthesize_echo(s, small, x);
        for (auto [d, f] : {std::pair<Eigen::Index, double>{30, s.doppler_hz(small)}, {0, 0.0}, {57, 1234.5}})
            CHECK((cross_ambiguity(y, x, d, f) - brute_e(y, x, d, f)).norm() < 1e-12 * std::max(1.0, brute_e(y, x, d, f).norm()) + 1e-18);
    }

    SECTION("zero echo")
    {
        const auto x = generate_orthogonal(10, 100, 1, B);
        ReceivedEcho y{ComplexMatrix::Zero(7, 100), B};
        CHECK(cross_ambiguity(y, x, 5, 100.0).norm() == 0.0);
    }

    SECTION("delay mismatch by a code block or more leaves only sidelobes")
    {
        ArrayConfig small = cfg;
        small.num_tx = 4;
        small.num_rx = 2;
        const auto x = generate_orthogonal(4, 1000, 8, B);
        TargetScene s;
        s.range = 1.0;
        s.radial_velocity = 0.0;
        const auto y = synthesize_echo(s, small, x);
        const double t0 = x.duration();
        for (Eigen::Index miss : {4, 8, 40, 123})
            CHECK(cross_ambiguity(y, x, miss, 0.0).cwiseAbs().maxCoeff() < 0.25 * t0);
    }

    SECTION("errors")
    {
        const auto x = generate_orthogonal(10, 100, 1, B);
        ReceivedEcho y{ComplexMatrix::Zero(7, 90), B};
        CHECK_THROWS_AS(cross_ambiguity(y, x, 0, 0.0), Error);
        ReceivedEcho ok{ComplexMatrix::Zero(7, 100), B};
        CHECK_THROWS_AS(cross_ambiguity(ok, x, 100, 0.0), Error);
    }
}

TEST_CASE("estimator - ml_objective")
{
    const ArrayConfig cfg;
    const auto x = generate_orthogonal(10, 10000, 4, B);
    const ComplexMatrix r = correlation_matrix(x);

    CHECK(ml_objective(ComplexMatrix::Zero(7, 10), r, cfg, 0.3) == 0.0);

    TargetScene s;
    s.range = 1.0;
    s.radial_velocity = 0.0;
    const auto y = synthesize_echo(s, cfg, x);
    const ComplexMatrix e = cross_ambiguity(y, x, 0, 0.0);

    // Numerator |a_R^H E a_T^*|^2 = (M_R M_T T_0)^2 at broadside.
    const double full = ml_objective(e, r, cfg, 0.0);
    const double ortho = ml_objective_orthogonal(e, cfg, 0.0, 1e-3);
    CHECK(full == Catch::Approx(70.0 * 70.0 * 1e-6 / (70.0 * 1e-3)).epsilon(1e-9));
    CHECK(std::abs(full - ortho) < 1e-9 * full);
    for (double deg : {-60.0, -5.0, 22.0, 80.0})
    {
        const double th = deg_to_rad(deg);
        CHECK(std::abs(ml_objective(e, r, cfg, th) - ml_objective_orthogonal(e, cfg, th, 1e-3)) <
              1e-9 * std::max(1e-30, ml_objective(e, r, cfg, th)));
    }

    CHECK(ml_objective(2.5 * e, r, cfg, 0.1) == Catch::Approx(6.25 * ml_objective(e, r, cfg, 0.1)).epsilon(1e-12));

    try
    {
        ml_objective(e, ComplexMatrix::Zero(10, 10), cfg, 0.0);
        FAIL("expected degenerate denominator");
    }
    catch (const Error &err)
    {
        CHECK(err.code() == ErrorCode::degenerate_denominator);
    }
    CHECK_THROWS_AS(ml_objective(ComplexMatrix::Zero(3, 10), r, cfg, 0.0), Error);
}

TEST_CASE("estimator - fast sweeps agree with the generic objective")
{
    const ArrayConfig cfg;
    const auto x = generate_orthogonal(10, 4000, 6, B);
    TargetScene s = baseline_scene();
    s.range = 2000.0;
    s.angle = deg_to_rad(-8.0);
    const auto p = projection_matrix(rstest::random_matrix(3, 10, 3));
    const auto px = project_waveform(p, x);

    for (const WaveformMatrix *w : {&x, &px})
    {
        const auto y = synthesize_echo(s, cfg, *w);
        const ComplexMatrix r = correlation_matrix(*w);
        const Eigen::Index d = s.delay_samples(cfg, B);
        const double fd = s.doppler_hz(cfg);

        const auto grid_d = delay_window(d - 12, d + 12);
        const auto del = estimate_delay(y, *w, s.angle, fd, grid_d, cfg);
        for (std::size_t i = 0; i < grid_d.size(); ++i)
        {
            const double ref = ml_objective(cross_ambiguity(y, *w, grid_d[i], fd), r, cfg, s.angle);
            CHECK(std::abs(del.surface.objective[i] - ref) <= 1e-9 * std::max(ref, del.surface.peak() * 1e-6));
        }

        const auto grid_f = doppler_grid(fd - 3000.0, fd + 3000.0, 250.0);
        const auto dop = estimate_doppler(y, *w, s.angle, d, grid_f, cfg);
        for (std::size_t i = 0; i < grid_f.size(); ++i)
        {
            const double ref = ml_objective(cross_ambiguity(y, *w, d, grid_f[i]), r, cfg, s.angle);
            CHECK(std::abs(dop.surface.objective[i] - ref) <= 1e-9 * std::max(ref, dop.surface.peak() * 1e-6));
        }

        const auto grid_a = angle_grid_deg(-20.0, 5.0, 2.5);
        const auto ang = estimate_angle(y, *w, d, fd, grid_a, cfg);
        const ComplexMatrix e = cross_ambiguity(y, *w, d, fd);
        for (std::size_t i = 0; i < grid_a.size(); ++i)
            CHECK(ang.surface.objective[i] == Catch::Approx(ml_objective(e, r, cfg, grid_a[i])).epsilon(1e-12));
    }
}

TEST_CASE("estimator - noiseless baseline estimates")
{
    const ArrayConfig cfg;
    const auto x = generate_orthogonal(10, 10000, 11, B);
    const TargetScene s = baseline_scene();
    const auto y = synthesize_echo(s, cfg, x);
    const double fd = s.doppler_hz(cfg);

    const auto ang = estimate_angle(y, x, 333, fd, angle_grid_deg(-90.0, 90.0, 0.1), cfg);
    CHECK(ang.surface.grid.size() == 1801);
    CHECK(ang.theta_hat == 0.0);
    CHECK(ang.surface.excluded.empty());

    const auto del = estimate_delay(y, x, 0.0, fd, delay_window(0, 9999), cfg);
    CHECK(del.delay_hat == 333);

    const auto dop = estimate_doppler(y, x, 0.0, 333, doppler_grid(0.0, 100e3, 100.0), cfg);
    CHECK(dop.doppler_hat == Catch::Approx(47300.0));

    SECTION("alternate angle")
    {
        TargetScene s20 = s;
        s20.angle = deg_to_rad(20.0);
        const auto y20 = synthesize_echo(s20, cfg, x);
        const auto a20 = estimate_angle(y20, x, 333, fd, angle_grid_deg(-90.0, 90.0, 0.1), cfg);
        CHECK(rad_to_deg(a20.theta_hat) == Catch::Approx(20.0).margin(1e-9));
    }

    SECTION("zero delay and zero Doppler scenes")
    {
        TargetScene still = s;
        still.range = 1.0;
        still.radial_velocity = 0.0;
        const auto y0 = synthesize_echo(still, cfg, x);
        CHECK(estimate_delay(y0, x, 0.0, 0.0, delay_window(0, 200), cfg).delay_hat == 0);
        CHECK(estimate_doppler(y0, x, 0.0, 0, doppler_grid(0.0, 100e3, 100.0), cfg).doppler_hat == 0.0);
    }

    SECTION("peak dominance beyond the main lobe")
    {
        // Doppler main lobe half-width is 1 / T_0 = 1 kHz; the delay main lobe is one sample.
        for (std::size_t i = 0; i < dop.surface.grid.size(); ++i)
            if (std::abs(dop.surface.grid[i] - fd) >= 1000.0)
                CHECK(dop.surface.objective[i] < dop.surface.peak());
        for (std::size_t i = 0; i < del.surface.grid.size(); ++i)
            if (i != del.surface.argmax)
                CHECK(del.surface.objective[i] < del.surface.peak());
    }

    SECTION("global phase rotation of the echo leaves the surfaces unchanged")
    {
        ReceivedEcho rotated{y.samples * std::polar(1.0, 1.234), y.sample_rate};
        const auto del_r = estimate_delay(rotated, x, 0.0, fd, delay_window(300, 360), cfg);
        const auto del_o = estimate_delay(y, x, 0.0, fd, delay_window(300, 360), cfg);
        for (std::size_t i = 0; i < del_o.surface.objective.size(); ++i)
            CHECK(del_r.surface.objective[i] ==
                  Catch::Approx(del_o.surface.objective[i]).epsilon(1e-9).margin(1e-12 * del_o.surface.peak()));
        const auto ang_r = estimate_angle(rotated, x, 333, fd, angle_grid_deg(-30.0, 30.0, 1.0), cfg);
        const auto ang_o = estimate_angle(y, x, 333, fd, angle_grid_deg(-30.0, 30.0, 1.0), cfg);
        for (std::size_t i = 0; i < ang_o.surface.objective.size(); ++i)
            CHECK(ang_r.surface.objective[i] ==
                  Catch::Approx(ang_o.surface.objective[i]).epsilon(1e-9).margin(1e-12 * ang_o.surface.peak()));
    }
}

TEST_CASE("estimator - null-space projected waveforms keep the delay and Doppler argmax")
{
    const ArrayConfig cfg;
    const auto x = generate_orthogonal(10, 10000, 12, B);
    const TargetScene s = baseline_scene();
    const double fd = s.doppler_hz(cfg);
    const auto set = sample_channel_set(10, {2, 4, 6, 8}, 31);
    const auto sel = select_channels(x, set);

    const auto y0 = synthesize_echo(s, cfg, x);
    const auto d0 = estimate_delay(y0, x, 0.0, fd, delay_window(283, 383), cfg);
    const auto f0 = estimate_doppler(y0, x, 0.0, 333, doppler_grid(0.0, 100e3, 100.0), cfg);

    for (const Projector *p : {&sel.best_projector(), &sel.worst_projector()})
    {
        const auto px = project_waveform(*p, x);
        const auto y = synthesize_echo(s, cfg, px);
        CHECK(estimate_delay(y, px, 0.0, fd, delay_window(283, 383), cfg).delay_hat == d0.delay_hat);
        CHECK(estimate_doppler(y, px, 0.0, 333, doppler_grid(0.0, 100e3, 100.0), cfg).doppler_hat == f0.doppler_hat);
    }
}

TEST_CASE("estimator - degenerate and invalid inputs")
{
    const ArrayConfig cfg;
    const auto x = generate_orthogonal(10, 1000, 1, B);
    WaveformMatrix zero{ComplexMatrix::Zero(10, 1000), B};
    ReceivedEcho y{ComplexMatrix::Zero(7, 1000), B};

    try
    {
        estimate_angle(y, zero, 0, 0.0, angle_grid_deg(-10, 10, 1), cfg);
        FAIL("expected degenerate denominator");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::degenerate_denominator);
    }
    CHECK_THROWS_AS(estimate_delay(y, zero, 0.0, 0.0, delay_window(0, 10), cfg), Error);
    CHECK_THROWS_AS(estimate_doppler(y, zero, 0.0, 0, doppler_grid(0, 1000, 100), cfg), Error);

    // A zero echo with a healthy reference is not degenerate; ties go to the first grid point.
    const auto flat = estimate_delay(y, x, 0.0, 0.0, delay_window(5, 10), cfg);
    CHECK(flat.delay_hat == 5);

    CHECK_THROWS_AS(estimate_angle(y, x, 0, 0.0, {}, cfg), Error);
    CHECK_THROWS_AS(estimate_angle(y, x, 0, 0.0, {0.2, 0.1}, cfg), Error);
    CHECK_THROWS_AS(estimate_delay(y, x, 0.0, 0.0, {3, 3}, cfg), Error);
    CHECK_THROWS_AS(estimate_delay(y, x, 0.0, 0.0, {999, 1000}, cfg), Error);
    ReceivedEcho wrong{ComplexMatrix::Zero(6, 1000), B};
    CHECK_THROWS_AS(estimate_doppler(wrong, x, 0.0, 0, {0.0}, cfg), Error);
}

TEST_CASE("estimator - ML denominator equals T_0 M_T for orthonormal waveforms")
{
    const ArrayConfig cfg;
    const auto x = generate_orthogonal(10, 10000, 2, B);
    const ComplexMatrix rt = correlation_matrix(x).transpose();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(-pi / 2, pi / 2);
    for (int i = 0; i < 100; ++i)
    {
        const ComplexVector a = tx_steering(cfg, ang(rng));
        const double den = (a.adjoint() * rt * a)(0, 0).real();
        CHECK(std::abs(den - 1e-3 * 10) < 1e-9 * 1e-3 * 10);
    }
}
