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


#include "secbeam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace secbeam
{
    namespace
    {
        std::string fmt(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }

        double parse_number(const std::string &text, const std::string &what)
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(text, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != text.size())
                throw std::invalid_argument("sweep: " + what + " '" + text + "' is not a number");
            return v;
        }

        std::vector<std::string> split(const std::string &text, char sep)
        {
            std::vector<std::string> parts;
            std::size_t begin = 0;
            for (;;)
            {
                const std::size_t end = text.find(sep, begin);
                parts.push_back(text.substr(begin, end - begin));
                if (end == std::string::npos)
                    break;
                begin = end + 1;
            }
            return parts;
        }
    } // namespace

    std::string to_string(Band b)
    {
        return b == Band::mmwave ? "mmwave" : "sub6";
    }

    Band band_from_string(const std::string &name)
    {
        if (name == "mmwave")
            return Band::mmwave;
        if (name == "sub6")
            return Band::sub6;
        throw std::invalid_argument("unknown band '" + name + "' (expected sub6 or mmwave)");
    }

    SweepAxis SweepAxis::snr(double start_db, double stop_db, double step_db)
    {
        return {Kind::snr, start_db, stop_db, step_db};
    }

    SweepAxis SweepAxis::users(std::size_t first, std::size_t last)
    {
        return {Kind::users, static_cast<double>(first), static_cast<double>(last), 1.0};
    }

    std::vector<double> SweepAxis::values() const
    {
        std::vector<double> out;
        if (kind == Kind::none || stop < start)
            return out;
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            out.push_back(start + static_cast<double>(i) * step);
        return out;
    }

    std::string SweepAxis::to_string() const
    {
        switch (kind)
        {
        case Kind::none:
            return "none";
        case Kind::snr:
            return "snr:" + fmt(start) + ":" + fmt(stop) + ":" + fmt(step);
        case Kind::users:
            return "users:" + fmt(start) + ":" + fmt(stop);
        }
        return "none";
    }

    SweepAxis SweepAxis::parse(const std::string &text)
    {
        const auto parts = split(text, ':');
        if (parts.size() == 1 && parts[0] == "none")
            return none();
        if (parts[0] == "snr" && parts.size() == 4)
        {
            const double step = parse_number(parts[3], "snr step");
            if (!(step > 0.0))
                throw std::invalid_argument("sweep: snr step must be positive, got '" + parts[3] + "'");
            return snr(parse_number(parts[1], "snr start"), parse_number(parts[2], "snr stop"), step);
        }
        if (parts[0] == "users" && parts.size() == 3)
        {
            const double first = parse_number(parts[1], "first user count");
            const double last = parse_number(parts[2], "last user count");
            if (first < 1.0 || first != std::floor(first) || last != std::floor(last))
                throw std::invalid_argument("sweep: user counts must be positive integers, got '" + text + "'");
            return {Kind::users, first, last, 1.0};
        }
        throw std::invalid_argument("sweep: expected none, snr:A:B:STEP or users:A:B, got '" + text + "'");
    }

    ScenarioConfig ScenarioConfig::defaults(Band band)
    {
        ScenarioConfig c;
        c.band = band;
        if (band == Band::mmwave)
        {
            c.n_t = 64;
            c.n_r = c.n_e = 4;
            c.channel.n_clusters = 4;
            c.channel.n_rays = 15;
        }
        else
        {
            c.n_t = 16;
            c.n_r = c.n_e = 2;
            c.channel.n_clusters = 10;
            c.channel.n_rays = 20;
        }
        c.n_j = 4;
        c.users = 5;
        c.eves = 1;
        c.channel.angular_spread_deg = 10.0;
        c.channel.array = ArrayKind::uniform_linear;
        c.channel.spacing = 0.5;
        c.power = PowerConfig{5.0, -10.0, 1.0, 1.0};
        c.energy = EnergyModel{100.0, 100.0, 10.0, 0, Connectivity::fully_connected};
        c.ascent = AscentConfig{0.1, 1e-7, 5000, 0.5};
        c.power_adapt.reset();
        c.filter = Filter::mmse;
        c.trials = 1000;
        c.master_seed = 1;
        c.sweep = SweepAxis::none();
        return c;
    }

    void ScenarioConfig::validate() const
    {
        const auto positive = [](std::size_t v, const char *key) {
            if (v == 0)
                throw std::invalid_argument(std::string(key) + ": must be at least 1");
        };
        positive(n_t, "n_t");
        positive(n_r, "n_r");
        positive(n_e, "n_e");
        positive(n_j, "n_j");
        positive(users, "users");
        positive(eves, "eves");
        positive(trials, "trials");
        positive(channel.n_clusters, "channel.n_clusters");
        positive(channel.n_rays, "channel.n_rays");
        if (!(channel.angular_spread_deg > 0.0) || !std::isfinite(channel.angular_spread_deg))
            throw std::invalid_argument("channel.angular_spread_deg: must be positive");
        if (!(channel.spacing > 0.0) || !std::isfinite(channel.spacing))
            throw std::invalid_argument("channel.spacing: must be positive");
        power.validate();
        if (!(energy.p_rf_mw > 0.0) || !(energy.p_pa_mw > 0.0) || !(energy.p_ps_mw > 0.0))
            throw std::invalid_argument("energy: p_rf_mw, p_pa_mw and p_ps_mw must be positive");
        ascent.validate();
        if (power_adapt)
            power_adapt->validate();

        std::size_t most_users = users;
        if (sweep.kind == SweepAxis::Kind::users)
        {
            for (double v : sweep.values())
                most_users = std::max(most_users, static_cast<std::size_t>(v));
        }
        if (sweep.kind == SweepAxis::Kind::snr && !(sweep.step > 0.0))
            throw std::invalid_argument("sweep: snr step must be positive");
        if (most_users > n_t)
            throw std::invalid_argument("users: " + std::to_string(most_users) + " users need at least as many BS antennas (n_t = " +
                                        std::to_string(n_t) + ")");
    }

    ChannelSetShape ScenarioConfig::shape() const
    {
        return ChannelSetShape{n_t, n_r, n_e, n_j, users, eves, channel};
    }

    EnergyModel ScenarioConfig::energy_model() const
    {
        EnergyModel m = energy;
        if (m.n_rf == 0)
            m.n_rf = users;
        return m;
    }

    PipelineConfig ScenarioConfig::pipeline() const
    {
        return PipelineConfig{power, ascent, power_adapt, energy_model()};
    }

    std::size_t ScenarioConfig::axis_points() const
    {
        return sweep.kind == SweepAxis::Kind::none ? 1 : sweep.values().size();
    }

    double ScenarioConfig::axis_value(std::size_t index) const
    {
        switch (sweep.kind)
        {
        case SweepAxis::Kind::none:
            return power.p_b_db;
        case SweepAxis::Kind::snr:
        case SweepAxis::Kind::users:
            return sweep.values().at(index);
        }
        return 0.0;
    }

    ScenarioConfig ScenarioConfig::at_axis_point(std::size_t index) const
    {
        ScenarioConfig c = *this;
        if (sweep.kind == SweepAxis::Kind::snr)
            c.power.p_b_db = axis_value(index);
        else if (sweep.kind == SweepAxis::Kind::users)
            c.users = static_cast<std::size_t>(axis_value(index));
        c.sweep = SweepAxis::none();
        return c;
    }

    ChannelSet generate_channel_set(const ScenarioConfig &scenario, RandomStream &rng)
    {
        return generate_channel_set(scenario.shape(), rng);
    }

} // namespace secbeam
