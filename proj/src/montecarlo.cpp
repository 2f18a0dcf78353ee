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


#include "secbeam/montecarlo.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace secbeam
{
    bool CampaignResult::failed() const
    {
        for (const auto &p : points)
            if (p.failures * 100 > config.trials)
                return true;
        return false;
    }

    RandomStream trial_stream(std::uint64_t master_seed, std::size_t axis, std::size_t trial)
    {
        return RandomStream(master_seed).child({static_cast<std::uint64_t>(axis), static_cast<std::uint64_t>(trial)});
    }

    TrialOutcome run_trial(const ScenarioConfig &point, RandomStream stream, std::span<const Filter> filters)
    {
        const ChannelSet channels = generate_channel_set(point, stream);
        const BeamformerState initial = random_initial_state(channels, stream);
        const PipelineConfig cfg = point.pipeline();

        TrialOutcome out;
        out.per_filter.resize(filters.size());
        AnalogStageResult analog;
        try
        {
            analog = run_analog_stage(channels, initial, cfg);
        }
        catch (const NumericalError &)
        {
            out.analog_ok = false;
            return out;
        }

        double su_sum = 0.0;
        for (double s : analog.su_secrecy)
            su_sum += s;
        out.su_secrecy = su_sum / static_cast<double>(analog.su_secrecy.size());
        out.su_efficiency = energy_efficiency(out.su_secrecy, analog.power, cfg.energy, channels.n_t());
        out.cycles = analog.cycles;
        out.final_pb_db = analog.power.p_b_db;
        out.target_met = analog.target_met;

        for (std::size_t k = 0; k < filters.size(); ++k)
        {
            try
            {
                out.per_filter[k] = run_digital_stage(channels, analog, cfg, filters[k]);
            }
            catch (const PrecoderError &)
            {
                out.per_filter[k].reset();
            }
        }
        return out;
    }

    namespace
    {
        // Fixed-order mean of the completed trials for one curve.
        template <typename Pick>
        CurvePoint aggregate(double axis, const std::vector<TrialOutcome> &trials, Pick pick)
        {
            CurvePoint p;
            p.axis = axis;
            double secrecy = 0.0, efficiency = 0.0, cycles = 0.0, pb = 0.0, met = 0.0;
            for (const auto &t : trials)
            {
                const auto value = pick(t);
                if (!value)
                {
                    ++p.failures;
                    continue;
                }
                ++p.trials;
                secrecy += value->first;
                efficiency += value->second;
                cycles += static_cast<double>(t.cycles);
                pb += t.final_pb_db;
                met += t.target_met ? 1.0 : 0.0;
            }
            if (p.trials > 0)
            {
                const double n = static_cast<double>(p.trials);
                p.mean_secrecy = secrecy / n;
                p.mean_efficiency = efficiency / n;
                p.mean_cycles = cycles / n;
                p.mean_final_pb_db = pb / n;
                p.target_met_fraction = met / n;
            }
            return p;
        }
    } // namespace

    std::vector<CampaignResult> run_campaigns(const ScenarioConfig &cfg, std::span<const Filter> filters,
                                              bool include_su, const RunOptions &options)
    {
        cfg.validate();
        const std::size_t n_axis = cfg.sweep.kind == SweepAxis::Kind::none ? 1 : cfg.sweep.values().size();
        const std::size_t n_trials = cfg.trials;

        std::vector<ScenarioConfig> points;
        points.reserve(n_axis);
        for (std::size_t a = 0; a < n_axis; ++a)
            points.push_back(cfg.at_axis_point(a));

        // Slot (a, t) is written by exactly one worker; merged after join.
        std::vector<std::vector<TrialOutcome>> outcomes(n_axis, std::vector<TrialOutcome>(n_trials));
        const std::size_t total = n_axis * n_trials;
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;

        const auto worker = [&]() {
            for (;;)
            {
                const std::size_t job = next.fetch_add(1);
                if (job >= total)
                    return;
                const std::size_t a = job / n_trials;
                const std::size_t t = job % n_trials;
                try
                {
                    outcomes[a][t] = run_trial(points[a], trial_stream(cfg.master_seed, a, t), filters);
                }
                catch (...)
                {
                    const std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(total);
                }
            }
        };

        const std::size_t n_threads = std::max<std::size_t>(1, std::min(options.threads, std::max<std::size_t>(total, 1)));
        if (n_threads == 1)
            worker();
        else
        {
            std::vector<std::jthread> pool;
            pool.reserve(n_threads);
            for (std::size_t i = 0; i < n_threads; ++i)
                pool.emplace_back(worker);
        }
        if (error)
            std::rethrow_exception(error);

        std::vector<CampaignResult> curves;
        const auto make_curve = [&](std::string label) {
            CampaignResult r;
            r.label = std::move(label);
            r.config = cfg;
            r.seed = cfg.master_seed;
            r.variable_power = cfg.power_adapt.has_value();
            return r;
        };

        for (std::size_t k = 0; k < filters.size(); ++k)
        {
            CampaignResult r = make_curve(to_string(filters[k]));
            for (std::size_t a = 0; a < n_axis; ++a)
                r.points.push_back(aggregate(cfg.axis_value(a), outcomes[a],
                                             [k](const TrialOutcome &t) -> std::optional<std::pair<double, double>> {
                                                 if (!t.analog_ok || !t.per_filter[k])
                                                     return std::nullopt;
                                                 return std::pair{t.per_filter[k]->mean_secrecy,
                                                                  t.per_filter[k]->mean_efficiency};
                                             }));
            curves.push_back(std::move(r));
        }
        if (include_su)
        {
            CampaignResult r = make_curve("su");
            for (std::size_t a = 0; a < n_axis; ++a)
                r.points.push_back(aggregate(cfg.axis_value(a), outcomes[a],
                                             [](const TrialOutcome &t) -> std::optional<std::pair<double, double>> {
                                                 if (!t.analog_ok)
                                                     return std::nullopt;
                                                 return std::pair{t.su_secrecy, t.su_efficiency};
                                             }));
            curves.push_back(std::move(r));
        }
        return curves;
    }

    CampaignResult run_campaign(const ScenarioConfig &cfg, const RunOptions &options)
    {
        const Filter filters[] = {cfg.filter};
        return run_campaigns(cfg, filters, false, options).front();
    }

    CampaignResult run_benchmark_su(const ScenarioConfig &cfg, const RunOptions &options)
    {
        return run_campaigns(cfg, {}, true, options).front();
    }

} // namespace secbeam
