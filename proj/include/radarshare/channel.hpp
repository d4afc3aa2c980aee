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

#ifndef RADARSHARE_CHANNEL_HPP
#define RADARSHARE_CHANNEL_HPP

#include "radarshare/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace radarshare
{
    // Radar-to-base-station interference channel H_i, N_R^BS(i) x M_T.
    struct InterferenceChannel
    {
        int bs_id = 1; // 1-based
        ComplexMatrix matrix;
    };

    // Ordered channels, bs_ids 1..N_BS.
    struct ChannelSet
    {
        std::vector<InterferenceChannel> channels;

        std::size_t size() const { return channels.size(); }
        Eigen::Index num_tx() const { return channels.empty() ? 0 : channels.front().matrix.cols(); }

        // Throws Error(invalid_argument) when ids are not 1..N_BS in order, shapes disagree or
        // entries are non-finite.
        void validate() const;
    };

    // I.i.d. CN(0, 1) (Rayleigh) entries.
    ChannelSet sample_channel_set(int num_tx, const std::vector<int> &rx_antennas_per_bs, std::uint64_t seed);

    // Adds independent CN(0, error_std^2) noise to every entry. Stand-in for imperfect channel learning.
    ChannelSet perturb_csi(const ChannelSet &set, double error_std, std::uint64_t seed);

    // JSON document: {"num_tx": M_T, "channels": {"<bs_id>": {"real": [[..]..], "imag": [[..]..]}}}
    std::string channel_set_to_json(const ChannelSet &set);
    ChannelSet channel_set_from_json(const std::string &text);
}

#endif
