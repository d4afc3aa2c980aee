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

#ifndef RADARSHARE_RNG_HPP
#define RADARSHARE_RNG_HPP

#include "radarshare/types.hpp"

#include <cstdint>
#include <random>

namespace radarshare
{
    // Seed streams derived from a master seed. Each concern owns a tag so that toggling
    // one concern (e.g. noise) never shifts the draws of another (e.g. channels).
    enum class SeedStream : std::uint64_t
    {
        waveform = 1,
        channels = 2,
        csi_error = 3,
        noise = 4,
    };

    // SplitMix64 finalizer.
    constexpr std::uint64_t mix64(std::uint64_t z)
    {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // seed = mix64(mix64(base ^ tag * golden) + counter)
    constexpr std::uint64_t derive_seed(std::uint64_t base, SeedStream stream, std::uint64_t counter)
    {
        return mix64(mix64(base ^ (static_cast<std::uint64_t>(stream) * 0x9E3779B97F4A7C15ull)) + counter);
    }

    using Rng = std::mt19937_64;

    // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    inline Complex complex_gaussian(Rng &rng, double variance)
    {
        std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
        const double re = n(rng);
        const double im = n(rng);
        return {re, im};
    }
}

#endif
