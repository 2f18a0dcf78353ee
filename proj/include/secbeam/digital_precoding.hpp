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


#ifndef SECBEAM_DIGITAL_PRECODING_HPP
#define SECBEAM_DIGITAL_PRECODING_HPP

#include "secbeam/analog_opt.hpp"
#include "secbeam/beamformer.hpp"
#include "secbeam/channel.hpp"
#include "secbeam/metrics.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace secbeam
{
    enum class Filter
    {
        zf,
        mmse,
        mrt
    };

    std::string to_string(Filter f);
    Filter filter_from_string(const std::string &name);

    // ZF met a singular effective channel. Campaigns count these per trial.
    class PrecoderError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // U x U matrix whose row u is w_u^H H_u F_RF.
    struct EffectiveChannel
    {
        ComplexMatrix matrix;
    };

    EffectiveChannel effective_channel(const ChannelSet &channels, const BeamformerState &state);

    // H^H (H H^H)^-1. Throws PrecoderError on a singular H H^H.
    ComplexMatrix precode_zf(const EffectiveChannel &h);

    // H^H (H H^H + (U / snr) I)^-1
    ComplexMatrix precode_mmse(const EffectiveChannel &h, double snr_linear);

    // H^H
    ComplexMatrix precode_mrt(const EffectiveChannel &h);

    ComplexMatrix precode(Filter filter, const EffectiveChannel &h, double snr_linear);

    // Scales column u of f_bb so that ||F_RF f_bb[:, u]|| = 1. Throws
    // PrecoderError when F_RF f_bb[:, u] vanishes.
    ComplexMatrix normalize_columns(const ComplexMatrix &f_bb, const ComplexMatrix &f_rf);

    // Everything a scenario needs to run one trial, independent of the
    // sweep machinery.
    struct PipelineConfig
    {
        PowerConfig power;
        AscentConfig ascent;
        std::optional<PowerAdaptConfig> power_adapt;
        EnergyModel energy; // n_rf == 0: one RF chain per user
    };

    // Output of the per-user analog stage.
    struct AnalogStageResult
    {
        BeamformerState state;
        PowerConfig power;                 // BS power used by the digital stage
        std::vector<double> su_secrecy;    // C_s^SU per user at the final beams
        std::vector<std::size_t> iterations;
        std::size_t cycles = 1;            // max over users (power adaptation)
        bool target_met = true;            // every user reached the target
    };

    // Gradient ascent per user, or the power-adapting variant when
    // cfg.power_adapt is set. With power adaptation the BS power is the
    // largest final power over users, since one P_b serves every stream.
    AnalogStageResult run_analog_stage(const ChannelSet &channels, const BeamformerState &initial,
                                       const PipelineConfig &cfg);

    struct TrialResult
    {
        std::vector<double> secrecy;    // per-user MU secrecy
        std::vector<double> efficiency; // per-user bits/s/Hz per mW
        std::vector<double> su_secrecy; // per-user SU secrecy (benchmark)
        double mean_secrecy = 0.0;
        double mean_efficiency = 0.0;
        double mean_su_secrecy = 0.0;
        double mean_su_efficiency = 0.0;
        std::size_t cycles = 1;
        double final_pb_db = 0.0;
        bool target_met = true;
    };

    // Digital stage on top of a finished analog stage.
    TrialResult run_digital_stage(const ChannelSet &channels, const AnalogStageResult &analog,
                                  const PipelineConfig &cfg, Filter filter);

    // Analog stage then digital stage.
    TrialResult run_mu_pipeline(const ChannelSet &channels, const BeamformerState &initial,
                                const PipelineConfig &cfg, Filter filter);

} // namespace secbeam

#endif
