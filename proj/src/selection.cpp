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

#include "radarshare/selection.hpp"

#include <algorithm>

namespace radarshare
{
    namespace
    {
        template <typename Pred>
        std::size_t first_index_where(const std::vector<double> &v, Pred pred)
        {
            return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), pred) - v.begin());
        }
    }

    double projection_loss(const WaveformMatrix &x, const Projector &p)
    {
        require(p.dim() == x.num_tx(), "projection_loss: projector dimension differs from waveform row count");
        const ComplexMatrix residual_op = ComplexMatrix::Identity(p.dim(), p.dim()) - p.matrix;
        return (residual_op * x.samples).norm();
    }

    SelectionResult select_channels(const WaveformMatrix &x, const ChannelSet &set, double tol)
    {
        require(!set.channels.empty(), "select_channels: empty channel set");
        for (const auto &h : set.channels)
            require(h.matrix.cols() == x.num_tx(), "select_channels: channel column count must equal M_T");

        SelectionResult result;
        result.losses.reserve(set.size());
        result.projectors.reserve(set.size());
        bool any_usable = false;
        for (const auto &h : set.channels)
        {
            Projector p = projection_matrix(h, tol);
            any_usable = any_usable || !p.degenerate();
            result.losses.push_back(projection_loss(x, p));
            result.projectors.push_back(std::move(p));
        }
        if (!any_usable)
            fail(ErrorCode::no_usable_null_space, "select_channels: every interference channel has a trivial null space");

        const auto [lo, hi] = std::minmax_element(result.losses.begin(), result.losses.end());
        const double slack = selection_tie_tolerance * *hi;
        result.best_index = first_index_where(result.losses, [&](double l) { return l <= *lo + slack; });
        result.worst_index = first_index_where(result.losses, [&](double l) { return l >= *hi - slack; });
        return result;
    }
}
