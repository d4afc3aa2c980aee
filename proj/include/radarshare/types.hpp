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

#ifndef RADARSHARE_TYPES_HPP
#define RADARSHARE_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace radarshare
{
    using Complex = std::complex<double>;
    using ComplexMatrix = Eigen::MatrixXcd;
    using ComplexVector = Eigen::VectorXcd;
    using RealVector = Eigen::VectorXd;

    inline constexpr double pi = 3.14159265358979323846;

    inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
    inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

    // Error categories. The numeric values are mirrored by rs_status in the C API.
    enum class ErrorCode : int
    {
        invalid_argument = 1,
        parse_error = 2,
        validation_error = 3,
        io_error = 4,
        degenerate_null_space = 5,
        no_usable_null_space = 6,
        degenerate_denominator = 7,
    };

    const char *error_code_name(ErrorCode code);

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
        ErrorCode code() const noexcept { return code_; }

    private:
        ErrorCode code_;
    };

    [[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

    inline void require(bool cond, const std::string &what)
    {
        if (!cond)
            fail(ErrorCode::invalid_argument, what);
    }

    bool all_finite(const ComplexMatrix &m);
}

#endif
