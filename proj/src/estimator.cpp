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

#include "radarshare/estimator.hpp"

#include <cmath>
#include <limits>

namespace radarshare
{
    const char *axis_name(Axis axis)
    {
        switch (axis)
        {
        case Axis::angle:
            return "angle";
        case Axis::delay:
            return "delay";
        case Axis::doppler:
            return "doppler";
        }
        return "?";
    }

    namespace
    {
        template <typename T>
        void validate_axis_impl(const std::vector<T> &values, const char *what)
        {
            require(!values.empty(), std::string(what) + " grid is empty");
            for (std::size_t i = 1; i < values.size(); ++i)
                require(values[i] > values[i - 1], std::string(what) + " grid must be strictly increasing");
        }

        void check_pair(const ReceivedEcho &y, const WaveformMatrix &xref, const ArrayConfig &cfg)
        {
            require(y.num_samples() == xref.num_samples(), "estimator: echo and reference lengths differ");
            require(y.samples.rows() == cfg.num_rx, "estimator: echo rows must equal num_rx");
            require(xref.num_tx() == cfg.num_tx, "estimator: reference rows must equal num_tx");
        }

        // Receive beam w[n] = a_R^H y[n].
        Eigen::RowVectorXcd rx_beam(const ReceivedEcho &y, const ArrayConfig &cfg, double theta)
        {
            return rx_steering(cfg, theta).adjoint() * y.samples;
        }

        // Transmit beam v[n] = a_T^T x[n]; note xref[n]^H a_T^* = conj(v[n]).
        Eigen::RowVectorXcd tx_beam(const WaveformMatrix &x, const ArrayConfig &cfg, double theta)
        {
            return tx_steering(cfg, theta).transpose() * x.samples;
        }

        // Picks the first maximum among non-excluded points.
        void finish_surface(ObjectiveSurface &s, const std::vector<bool> &ok)
        {
            bool found = false;
            for (std::size_t i = 0; i < s.objective.size(); ++i)
            {
                if (!ok[i])
                {
                    s.excluded.push_back(i);
                    s.objective[i] = 0.0;
                    continue;
                }
                if (!found || s.objective[i] > s.objective[s.argmax])
                {
                    s.argmax = i;
                    found = true;
                }
            }
            if (!found)
                fail(ErrorCode::degenerate_denominator,
                     std::string("estimate_") + axis_name(s.axis) + ": every grid point has a vanishing denominator");
        }

        // Fixed-axis denominator M_R T_s sum |v[n]|^2 with its guard.
        bool denominator(const Eigen::RowVectorXcd &v, const WaveformMatrix &x, int num_rx, double &out)
        {
            const double trace_r = x.sample_period() * x.samples.squaredNorm();
            const double quad = x.sample_period() * v.squaredNorm();
            out = num_rx * quad;
            return trace_r > 0.0 && quad >= denominator_guard * trace_r;
        }
    }

    void validate_axis(const std::vector<double> &values, const char *what) { validate_axis_impl(values, what); }
    void validate_axis(const std::vector<Eigen::Index> &values, const char *what) { validate_axis_impl(values, what); }

    ComplexMatrix cross_ambiguity(const ReceivedEcho &y, const WaveformMatrix &xref, Eigen::Index delay,
                                  double doppler_hz)
    {
        require(y.num_samples() == xref.num_samples(), "cross_ambiguity: echo and reference lengths differ");
        const Eigen::Index n = y.num_samples();
        require(delay >= 0 && delay < n, "cross_ambiguity: delay must lie in [0, N)");

        const double ts = y.sample_period();
        ComplexMatrix e = ComplexMatrix::Zero(y.samples.rows(), xref.num_tx());
        for (Eigen::Index col = delay; col < n; ++col)
        {
            const Complex ph = std::polar(1.0, 2.0 * pi * doppler_hz * static_cast<double>(col) * ts);
            e.noalias() += (y.samples.col(col) * ph) * xref.samples.col(col - delay).adjoint();
        }
        return e * ts;
    }

    double ml_objective(const ComplexMatrix &e, const ComplexMatrix &r, const ArrayConfig &cfg, double theta)
    {
        require(e.rows() == cfg.num_rx && e.cols() == cfg.num_tx, "ml_objective: E must be M_R x M_T");
        require(r.rows() == cfg.num_tx && r.cols() == cfg.num_tx, "ml_objective: R must be M_T x M_T");

        const ComplexVector a_t = tx_steering(cfg, theta);
        const ComplexVector a_r = rx_steering(cfg, theta);
        const Complex num = (a_r.adjoint() * e * a_t.conjugate())(0, 0);
        const double quad = (a_t.adjoint() * r.transpose() * a_t)(0, 0).real();
        const double trace_r = r.trace().real();
        if (!(trace_r > 0.0) || quad < denominator_guard * trace_r)
            fail(ErrorCode::degenerate_denominator, "ml_objective: a_T^H R^T a_T vanishes");
        return std::norm(num) / (cfg.num_rx * quad);
    }

    double ml_objective_orthogonal(const ComplexMatrix &e, const ArrayConfig &cfg, double theta, double t0)
    {
        require(t0 > 0.0, "ml_objective_orthogonal: T_0 must be > 0");
        const ComplexVector a_t = tx_steering(cfg, theta);
        const ComplexVector a_r = rx_steering(cfg, theta);
        const Complex num = (a_r.adjoint() * e * a_t.conjugate())(0, 0);
        return std::norm(num) / (static_cast<double>(cfg.num_rx) * cfg.num_tx * t0);
    }

    EstimationResult estimate_angle(const ReceivedEcho &y, const WaveformMatrix &xref, Eigen::Index true_delay,
                                    double true_doppler_hz, const std::vector<double> &angle_grid,
                                    const ArrayConfig &cfg)
    {
        check_pair(y, xref, cfg);
        validate_axis(angle_grid, "angle");

        const ComplexMatrix e = cross_ambiguity(y, xref, true_delay, true_doppler_hz);
        const ComplexMatrix rt = correlation_matrix(xref).transpose();
        const double trace_r = rt.trace().real();

        ObjectiveSurface s;
        s.axis = Axis::angle;
        s.grid = angle_grid;
        s.objective.resize(angle_grid.size());
        std::vector<bool> ok(angle_grid.size());
        for (std::size_t i = 0; i < angle_grid.size(); ++i)
        {
            const ComplexVector a_t = tx_steering(cfg, angle_grid[i]);
            const ComplexVector a_r = rx_steering(cfg, angle_grid[i]);
            const double quad = (a_t.adjoint() * rt * a_t)(0, 0).real();
            ok[i] = trace_r > 0.0 && quad >= denominator_guard * trace_r;
            if (ok[i])
                s.objective[i] = std::norm((a_r.adjoint() * e * a_t.conjugate())(0, 0)) / (cfg.num_rx * quad);
        }
        finish_surface(s, ok);

        EstimationResult out;
        out.theta_hat = angle_grid[s.argmax];
        out.delay_hat = true_delay;
        out.doppler_hat = true_doppler_hz;
        out.surface = std::move(s);
        return out;
    }

    EstimationResult estimate_delay(const ReceivedEcho &y, const WaveformMatrix &xref, double true_theta,
                                    double true_doppler_hz, const std::vector<Eigen::Index> &delay_grid,
                                    const ArrayConfig &cfg)
    {
        check_pair(y, xref, cfg);
        validate_axis(delay_grid, "delay");
        const Eigen::Index n = y.num_samples();
        require(delay_grid.front() >= 0 && delay_grid.back() < n, "estimate_delay: delay grid must lie in [0, N)");

        const double ts = y.sample_period();
        Eigen::RowVectorXcd w = rx_beam(y, cfg, true_theta);
        for (Eigen::Index col = 0; col < n; ++col)
            w(col) *= std::polar(1.0, 2.0 * pi * true_doppler_hz * static_cast<double>(col) * ts);
        const Eigen::RowVectorXcd v = tx_beam(xref, cfg, true_theta);

        double den = 0.0;
        const bool den_ok = denominator(v, xref, cfg.num_rx, den);

        ObjectiveSurface s;
        s.axis = Axis::delay;
        s.objective.resize(delay_grid.size());
        std::vector<bool> ok(delay_grid.size(), den_ok);
        for (std::size_t i = 0; i < delay_grid.size(); ++i)
        {
            const Eigen::Index d = delay_grid[i];
            s.grid.push_back(static_cast<double>(d));
            if (!den_ok)
                continue;
            // sum_{n >= d} w[n] conj(v[n - d])
            const Complex num = ts * v.head(n - d).conjugate().cwiseProduct(w.tail(n - d)).sum();
            s.objective[i] = std::norm(num) / den;
        }
        finish_surface(s, ok);

        EstimationResult out;
        out.theta_hat = true_theta;
        out.delay_hat = delay_grid[s.argmax];
        out.doppler_hat = true_doppler_hz;
        out.surface = std::move(s);
        return out;
    }

    EstimationResult estimate_doppler(const ReceivedEcho &y, const WaveformMatrix &xref, double true_theta,
                                      Eigen::Index true_delay, const std::vector<double> &doppler_grid,
                                      const ArrayConfig &cfg)
    {
        check_pair(y, xref, cfg);
        validate_axis(doppler_grid, "doppler");
        const Eigen::Index n = y.num_samples();
        require(true_delay >= 0 && true_delay < n, "estimate_doppler: delay must lie in [0, N)");

        const double ts = y.sample_period();
        const Eigen::RowVectorXcd w = rx_beam(y, cfg, true_theta);
        const Eigen::RowVectorXcd v = tx_beam(xref, cfg, true_theta);
        const Eigen::Index len = n - true_delay;
        // z[m] corresponds to absolute sample index true_delay + m.
        const Eigen::RowVectorXcd z = w.tail(len).cwiseProduct(v.head(len).conjugate());

        double den = 0.0;
        const bool den_ok = denominator(v, xref, cfg.num_rx, den);

        ObjectiveSurface s;
        s.axis = Axis::doppler;
        s.grid = doppler_grid;
        s.objective.resize(doppler_grid.size());
        std::vector<bool> ok(doppler_grid.size(), den_ok);
        constexpr Eigen::Index anchor_every = 512; // re-anchor the phasor recurrence to bound drift
        for (std::size_t i = 0; den_ok && i < doppler_grid.size(); ++i)
        {
            const double omega = 2.0 * pi * doppler_grid[i] * ts;
            const Complex step = std::polar(1.0, omega);
            Complex acc{0.0, 0.0};
            Complex ph;
            for (Eigen::Index m = 0; m < len; ++m)
            {
                if (m % anchor_every == 0)
                    ph = std::polar(1.0, omega * static_cast<double>(true_delay + m));
                acc += z(m) * ph;
                ph *= step;
            }
            s.objective[i] = std::norm(ts * acc) / den;
        }
        finish_surface(s, ok);

        EstimationResult out;
        out.theta_hat = true_theta;
        out.delay_hat = true_delay;
        out.doppler_hat = doppler_grid[s.argmax];
        out.surface = std::move(s);
        return out;
    }
}
