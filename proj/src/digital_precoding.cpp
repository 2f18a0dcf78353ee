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


#include "secbeam/digital_precoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace secbeam
{
    std::string to_string(Filter f)
    {
        switch (f)
        {
        case Filter::zf:
            return "zf";
        case Filter::mmse:
            return "mmse";
        case Filter::mrt:
            return "mrt";
        }
        return "?";
    }

    Filter filter_from_string(const std::string &name)
    {
        if (name == "zf")
            return Filter::zf;
        if (name == "mmse")
            return Filter::mmse;
        if (name == "mrt")
            return Filter::mrt;
        throw std::invalid_argument("unknown filter '" + name + "' (expected zf, mmse or mrt)");
    }

    EffectiveChannel effective_channel(const ChannelSet &channels, const BeamformerState &state)
    {
        state.validate_against(channels);
        const std::size_t n = channels.users();
        ComplexMatrix h(n, n);
        for (std::size_t u = 0; u < n; ++u)
        {
            const ComplexVector hw = matvec_hermitian(channels.bs_to_user[u], state.w_user[u]);
            for (std::size_t k = 0; k < n; ++k)
                h(u, k) = inner(hw, state.f_rf[k]);
        }
        return {std::move(h)};
    }

    ComplexMatrix precode_zf(const EffectiveChannel &h)
    {
        const ComplexMatrix hh = hermitian(h.matrix);
        try
        {
            return matmul(hh, inverse(matmul(h.matrix, hh)));
        }
        catch (const SingularMatrixError &e)
        {
            throw PrecoderError(std::string("zero-forcing: singular effective channel (") + e.what() + ")");
        }
    }

    ComplexMatrix precode_mmse(const EffectiveChannel &h, double snr_linear)
    {
        if (!(snr_linear > 0.0))
            throw std::invalid_argument("precode_mmse: snr must be positive");
        const ComplexMatrix hh = hermitian(h.matrix);
        ComplexMatrix gram = matmul(h.matrix, hh);
        const double reg = static_cast<double>(h.matrix.rows()) / snr_linear;
        for (std::size_t i = 0; i < gram.rows(); ++i)
            gram(i, i) += reg;
        return matmul(hh, inverse(gram));
    }

    ComplexMatrix precode_mrt(const EffectiveChannel &h)
    {
        return hermitian(h.matrix);
    }

    ComplexMatrix precode(Filter filter, const EffectiveChannel &h, double snr_linear)
    {
        switch (filter)
        {
        case Filter::zf:
            return precode_zf(h);
        case Filter::mmse:
            return precode_mmse(h, snr_linear);
        case Filter::mrt:
            return precode_mrt(h);
        }
        throw std::invalid_argument("precode: unknown filter");
    }

    ComplexMatrix normalize_columns(const ComplexMatrix &f_bb, const ComplexMatrix &f_rf)
    {
        if (f_rf.cols() != f_bb.rows())
            throw DimensionError("normalize_columns: F_RF " + shape_string(f_rf) + " with F_BB " + shape_string(f_bb));
        ComplexMatrix out = f_bb;
        for (std::size_t u = 0; u < f_bb.cols(); ++u)
        {
            const double norm = two_norm(matvec(f_rf, f_bb.column(u)));
            if (!(norm > 0.0) || !std::isfinite(norm))
                throw PrecoderError("normalize_columns: column " + std::to_string(u) + " of F_RF F_BB is degenerate");
            for (std::size_t r = 0; r < f_bb.rows(); ++r)
                out(r, u) /= norm;
        }
        return out;
    }

    AnalogStageResult run_analog_stage(const ChannelSet &channels, const BeamformerState &initial,
                                       const PipelineConfig &cfg)
    {
        initial.validate_against(channels);
        AnalogStageResult out;
        out.state = initial;
        out.power = cfg.power;
        const std::size_t n = channels.users();
        out.su_secrecy.assign(n, 0.0);
        out.iterations.assign(n, 0);

        if (!cfg.power_adapt)
        {
            const LinearPower lp = LinearPower::from(cfg.power);
            for (std::size_t u = 0; u < n; ++u)
            {
                AscentResult r = ascend_su(u, channels, out.state, lp, cfg.ascent);
                out.state = std::move(r.state);
                out.su_secrecy[u] = r.final_secrecy;
                out.iterations[u] = r.iterations;
            }
            return out;
        }

        out.cycles = 0;
        double highest = -INFINITY;
        for (std::size_t u = 0; u < n; ++u)
        {
            PowerAdaptResult r = ascend_su_power_adapt(u, channels, out.state, cfg.power, cfg.ascent, *cfg.power_adapt);
            out.state = std::move(r.state);
            out.su_secrecy[u] = r.final_secrecy;
            out.iterations[u] = r.total_iterations;
            out.cycles = std::max(out.cycles, r.cycles);
            out.target_met = out.target_met && r.success;
            if (r.final_pb_linear > highest)
            {
                highest = r.final_pb_linear;
                out.power = r.power;
            }
        }
        return out;
    }

    TrialResult run_digital_stage(const ChannelSet &channels, const AnalogStageResult &analog,
                                  const PipelineConfig &cfg, Filter filter)
    {
        const std::size_t n = channels.users();
        const LinearPower lp = LinearPower::from(analog.power);
        const ComplexMatrix f_rf = analog.state.f_rf_matrix();

        const EffectiveChannel h = effective_channel(channels, analog.state);
        const double snr = lp.p_b / lp.noise_user;
        const ComplexMatrix f_bb = normalize_columns(precode(filter, h, snr), f_rf);

        EnergyModel energy = cfg.energy;
        if (energy.n_rf == 0)
            energy.n_rf = n;
        const std::size_t n_t = channels.n_t();

        TrialResult t;
        t.secrecy.resize(n);
        t.efficiency.resize(n);
        t.su_secrecy = analog.su_secrecy;
        for (std::size_t u = 0; u < n; ++u)
        {
            t.secrecy[u] = secrecy_mu(u, channels, analog.state, f_bb, lp);
            t.efficiency[u] = energy_efficiency(t.secrecy[u], analog.power, energy, n_t);
        }
        const auto mean = [n](const std::vector<double> &v) {
            return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(n);
        };
        t.mean_secrecy = mean(t.secrecy);
        t.mean_efficiency = mean(t.efficiency);
        t.mean_su_secrecy = mean(t.su_secrecy);
        t.mean_su_efficiency = energy_efficiency(t.mean_su_secrecy, analog.power, energy, n_t);
        t.cycles = analog.cycles;
        t.final_pb_db = analog.power.p_b_db;
        t.target_met = analog.target_met;
        return t;
    }

    TrialResult run_mu_pipeline(const ChannelSet &channels, const BeamformerState &initial,
                                const PipelineConfig &cfg, Filter filter)
    {
        return run_digital_stage(channels, run_analog_stage(channels, initial, cfg), cfg, filter);
    }

} // namespace secbeam
