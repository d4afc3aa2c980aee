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

#include "radarshare/channel.hpp"
#include "radarshare/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace radarshare
{
    void ChannelSet::validate() const
    {
        require(!channels.empty(), "channel set is empty");
        const Eigen::Index cols = channels.front().matrix.cols();
        for (std::size_t i = 0; i < channels.size(); ++i)
        {
            const auto &h = channels[i];
            require(h.bs_id == static_cast<int>(i) + 1, "channel set: bs_ids must be 1..N_BS in order");
            require(h.matrix.rows() >= 1, "channel set: every channel needs at least one receive antenna");
            require(h.matrix.cols() == cols, "channel set: all channels must have M_T columns");
            require(all_finite(h.matrix), "channel set: non-finite channel entry");
        }
    }

    ChannelSet sample_channel_set(int num_tx, const std::vector<int> &rx_antennas_per_bs, std::uint64_t seed)
    {
        require(!rx_antennas_per_bs.empty(), "sample_channel_set: rx antenna list is empty");
        require(num_tx >= 1, "sample_channel_set: num_tx must be >= 1");
        for (int n : rx_antennas_per_bs)
            require(n >= 1, "sample_channel_set: every BS needs >= 1 receive antenna");

        Rng rng(seed);
        ChannelSet set;
        set.channels.reserve(rx_antennas_per_bs.size());
        for (std::size_t i = 0; i < rx_antennas_per_bs.size(); ++i)
        {
            ComplexMatrix h(rx_antennas_per_bs[i], num_tx);
            for (Eigen::Index c = 0; c < h.cols(); ++c)
                for (Eigen::Index r = 0; r < h.rows(); ++r)
                    h(r, c) = complex_gaussian(rng, 1.0);
            set.channels.push_back({static_cast<int>(i) + 1, std::move(h)});
        }
        return set;
    }

    ChannelSet perturb_csi(const ChannelSet &set, double error_std, std::uint64_t seed)
    {
        require(std::isfinite(error_std) && error_std >= 0.0, "perturb_csi: error_std must be >= 0");
        ChannelSet out = set;
        if (error_std == 0.0)
            return out;

        Rng rng(seed);
        const double var = error_std * error_std;
        for (auto &h : out.channels)
            for (Eigen::Index c = 0; c < h.matrix.cols(); ++c)
                for (Eigen::Index r = 0; r < h.matrix.rows(); ++r)
                    h.matrix(r, c) += complex_gaussian(rng, var);
        return out;
    }

    std::string channel_set_to_json(const ChannelSet &set)
    {
        nlohmann::ordered_json doc;
        doc["num_tx"] = set.num_tx();
        nlohmann::ordered_json chans = nlohmann::ordered_json::object();
        for (const auto &h : set.channels)
        {
            nlohmann::ordered_json re = nlohmann::ordered_json::array();
            nlohmann::ordered_json im = nlohmann::ordered_json::array();
            for (Eigen::Index r = 0; r < h.matrix.rows(); ++r)
            {
                std::vector<double> rr, ri;
                for (Eigen::Index c = 0; c < h.matrix.cols(); ++c)
                {
                    rr.push_back(h.matrix(r, c).real());
                    ri.push_back(h.matrix(r, c).imag());
                }
                re.push_back(rr);
                im.push_back(ri);
            }
            chans[std::to_string(h.bs_id)] = {{"real", re}, {"imag", im}};
        }
        doc["channels"] = chans;
        return doc.dump(2) + "\n";
    }

    ChannelSet channel_set_from_json(const std::string &text)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            fail(ErrorCode::parse_error, std::string("channel set: ") + e.what());
        }

        try
        {
            const int num_tx = doc.at("num_tx").get<int>();
            std::map<int, ComplexMatrix> by_id;
            for (const auto &[key, entry] : doc.at("channels").items())
            {
                std::size_t pos = 0;
                int id = 0;
                try
                {
                    id = std::stoi(key, &pos);
                }
                catch (const std::exception &)
                {
                    pos = 0;
                }
                if (pos != key.size() || id < 1)
                    fail(ErrorCode::validation_error, "channel set: bad bs_id key '" + key + "'");

                const auto re = entry.at("real").get<std::vector<std::vector<double>>>();
                const auto im = entry.at("imag").get<std::vector<std::vector<double>>>();
                if (re.size() != im.size() || re.empty())
                    fail(ErrorCode::validation_error, "channels." + key + ": real/imag row count mismatch");
                ComplexMatrix h(static_cast<Eigen::Index>(re.size()), num_tx);
                for (std::size_t r = 0; r < re.size(); ++r)
                {
                    if (re[r].size() != static_cast<std::size_t>(num_tx) || im[r].size() != static_cast<std::size_t>(num_tx))
                        fail(ErrorCode::validation_error, "channels." + key + ": row length must equal num_tx");
                    for (int c = 0; c < num_tx; ++c)
                        h(static_cast<Eigen::Index>(r), c) = {re[r][c], im[r][c]};
                }
                by_id[id] = std::move(h);
            }

            ChannelSet set;
            for (auto &[id, h] : by_id)
                set.channels.push_back({id, std::move(h)});
            try
            {
                set.validate();
            }
            catch (const Error &e)
            {
                fail(ErrorCode::validation_error, e.what());
            }
            return set;
        }
        catch (const nlohmann::json::exception &e)
        {
            fail(ErrorCode::validation_error, std::string("channel set: ") + e.what());
        }
    }
}
