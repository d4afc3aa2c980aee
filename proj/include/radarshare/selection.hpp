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

#ifndef RADARSHARE_SELECTION_HPP
#define RADARSHARE_SELECTION_HPP

#include "radarshare/channel.hpp"
#include "radarshare/nullspace.hpp"
#include "radarshare/waveform.hpp"

#include <vector>

namespace radarshare
{
    // Losses within this fraction of the largest loss count as tied.
    inline constexpr double selection_tie_tolerance = 1e-9;

    // ||X - P X||_F over the whole observation window.
    double projection_loss(const WaveformMatrix &x, const Projector &p);

    struct SelectionResult
    {
        std::size_t best_index = 0;   // position in ChannelSet::channels (0-based)
        std::size_t worst_index = 0;
        std::vector<double> losses;   // one per BS, in channel order
        std::vector<Projector> projectors;

        const Projector &best_projector() const { return projectors[best_index]; }
        const Projector &worst_projector() const { return projectors[worst_index]; }
    };

    // Channel selection: computes every channel's projector and loss, then picks the minimum-loss
    // (best) and maximum-loss (worst) channels. Ties go to the lowest bs_id, where a tie is any
    // loss within selection_tie_tolerance * max(loss) of the extreme.
    //
    // With exactly orthogonal equal-power waveforms the loss reduces to loss^2 = N * rank(H_i), so
    // channels with equal antenna counts are indistinguishable and the choice falls to the tie-break.
    //
    // A degenerate channel (trivial null space, P = 0) still takes part with loss ||X||_F and can be the
    // worst pick; its projected waveform is all zeros.
    //
    // Throws Error(no_usable_null_space) when every projector is degenerate.
    SelectionResult select_channels(const WaveformMatrix &x, const ChannelSet &set,
                                    double tol = default_rank_tolerance);
}

#endif
