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

#include "radarshare/types.hpp"

#include <cmath>

namespace radarshare
{
    const char *error_code_name(ErrorCode code)
    {
        switch (code)
        {
        case ErrorCode::invalid_argument:
            return "invalid argument";
        case ErrorCode::parse_error:
            return "parse error";
        case ErrorCode::validation_error:
            return "validation error";
        case ErrorCode::io_error:
            return "i/o error";
        case ErrorCode::degenerate_null_space:
            return "degenerate null space";
        case ErrorCode::no_usable_null_space:
            return "no usable null space";
        case ErrorCode::degenerate_denominator:
            return "degenerate denominator";
        }
        return "unknown error";
    }

    bool all_finite(const ComplexMatrix &m)
    {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
                    return false;
        return true;
    }
}
