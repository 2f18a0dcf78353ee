// SPDX-License-Identifier: Apache-2.0
//
// secbeam: secrecy-rate hybrid beamforming simulator
// Copyright (C) 2026 The secbeam authors
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


#ifndef SECBEAM_SCENARIO_HPP
#define SECBEAM_SCENARIO_HPP

#include "secbeam/analog_opt.hpp"
#include "secbeam/channel.hpp"
#include "secbeam/digital_precoding.hpp"
#include "secbeam/metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace secbeam
{
    enum class Band
    {
        sub6,
        mmwave
    };

    std::string to_string(Band b);
    Band band_from_string(const std::string &name);

    // What a campaign sweeps. SNR points are P_b in dB with unit noise.
    struct SweepAxis
    {
        enum class Kind
        {
            none,
            snr,
            users
        };

        Kind kind = Kind::none;
        double start = 0.0;
        double stop = 0.0;
        double step = 1.0;

        static SweepAxis none() { return {}; }
        static SweepAxis snr(double start_db, double stop_db, double step_db);
        static SweepAxis users(std::size_t first, std::size_t last);

        // Inclusive grid start, start + step, ... <= stop (1e-9 slack). Empty
        // when stop < start. Kind::none yields no values; campaigns then run
        // a single point at the configured P_b.
        std::vector<double> values() const;

        std::string to_string() const;
        static SweepAxis parse(const std::string &text);

        bool operator==(const SweepAxis &) const = default;
    };

    struct ScenarioConfig
    {
        Band band = Band::mmwave;
        std::size_t n_t = 64;
        std::size_t n_r = 4;
        std::size_t n_e = 4;
        std::size_t n_j = 4;
        std::size_t users = 5;
        std::size_t eves = 1;
        LinkModel channel;
        PowerConfig power;
        EnergyModel energy; // n_rf == 0 means one RF chain per user
        AscentConfig ascent;
        std::optional<PowerAdaptConfig> power_adapt;
        Filter filter = Filter::mmse;
        std::size_t trials = 1000;
        std::uint64_t master_seed = 1;
        SweepAxis sweep;

        // Reference parameters for the band plus the sweep settings used as
        // defaults (N_t = 64 / 16, U = 5, P_b = 5 dB, P_j = -10 dB, N_j = 4).
        static ScenarioConfig defaults(Band band);

        // Throws std::invalid_argument naming the offending key.
        void validate() const;

        ChannelSetShape shape() const;
        EnergyModel energy_model() const;
        PipelineConfig pipeline() const;

        // Number of axis points a campaign runs (1 for Kind::none).
        std::size_t axis_points() const;
        double axis_value(std::size_t index) const;

        // This config with the sweep applied at `index` and the sweep removed.
        ScenarioConfig at_axis_point(std::size_t index) const;

        bool operator==(const ScenarioConfig &) const = default;
    };

    ChannelSet generate_channel_set(const ScenarioConfig &scenario, RandomStream &rng);

} // namespace secbeam

#endif
