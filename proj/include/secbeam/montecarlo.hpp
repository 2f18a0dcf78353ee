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


#ifndef SECBEAM_MONTECARLO_HPP
#define SECBEAM_MONTECARLO_HPP

#include "secbeam/digital_precoding.hpp"
#include "secbeam/random.hpp"
#include "secbeam/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace secbeam
{
    struct RunOptions
    {
        std::size_t threads = 1;
    };

    // Averages at one axis point over the trials that completed.
    struct CurvePoint
    {
        double axis = 0.0;
        double mean_secrecy = 0.0;    // bits/s/Hz
        double mean_efficiency = 0.0; // bits/s/Hz per mW
        std::size_t trials = 0;       // completed trials
        std::size_t failures = 0;     // trials excluded (singular ZF, numerical failure)
        double mean_cycles = 0.0;     // power adaptation only
        double mean_final_pb_db = 0.0;
        double target_met_fraction = 0.0;
    };

    // One curve: a filter's MU secrecy, or the single-user benchmark ("su").
    struct CampaignResult
    {
        std::string label;
        ScenarioConfig config;
        std::uint64_t seed = 0;
        bool variable_power = false;
        std::vector<CurvePoint> points;

        // More than 1% of the configured trials failed at some axis point.
        bool failed() const;
    };

    // Per-trial results for every requested filter, sharing one analog stage.
    struct TrialOutcome
    {
        bool analog_ok = true;
        std::vector<std::optional<TrialResult>> per_filter; // nullopt when the filter failed
        double su_secrecy = 0.0;
        double su_efficiency = 0.0;
        std::size_t cycles = 1;
        double final_pb_db = 0.0;
        bool target_met = true;
    };

    // The stream of trial `trial` at axis point `axis`; a pure function of
    // its three arguments.
    RandomStream trial_stream(std::uint64_t master_seed, std::size_t axis, std::size_t trial);

    // Draws channels and initial beamformers from `stream`, then runs the
    // pipeline once per filter. `point` must carry no sweep.
    TrialOutcome run_trial(const ScenarioConfig &point, RandomStream stream, std::span<const Filter> filters);

    // All requested curves from one pass over the trials. Curves come back
    // in `filters` order, followed by the SU benchmark when requested.
    std::vector<CampaignResult> run_campaigns(const ScenarioConfig &cfg, std::span<const Filter> filters,
                                              bool include_su, const RunOptions &options = {});

    // MU curve for cfg.filter.
    CampaignResult run_campaign(const ScenarioConfig &cfg, const RunOptions &options = {});

    // SU secrecy curve (no inter-user interference) over the same trials.
    CampaignResult run_benchmark_su(const ScenarioConfig &cfg, const RunOptions &options = {});

} // namespace secbeam

#endif
