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


#include "secbeam/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace secbeam
{
    namespace
    {
        void check_user(std::size_t u, const ChannelSet &channels)
        {
            if (u >= channels.users())
                throw DimensionError("user index " + std::to_string(u) + " out of range for " +
                                     std::to_string(channels.users()) + " users");
        }

        void check_precoder(const ChannelSet &channels, const ComplexMatrix &f_bb)
        {
            const std::size_t n = channels.users();
            if (f_bb.rows() != n || f_bb.cols() != n)
                throw DimensionError("digital precoder is " + shape_string(f_bb) + ", expected " +
                                     std::to_string(n) + "x" + std::to_string(n));
        }

        // Row vector c^H H F_RF as a length-U vector.
        ComplexVector combined_row(const ComplexVector &combiner, const ComplexMatrix &h,
                                   const BeamformerState &state)
        {
            const ComplexVector hc = matvec_hermitian(h, combiner); // H^H c
            ComplexVector row(state.f_rf.size());
            for (std::size_t n = 0; n < state.f_rf.size(); ++n)
                row[n] = inner(hc, state.f_rf[n]);
            return row;
        }

        // |row . f_bb[:, n]|^2
        double stream_gain(const ComplexVector &row, const ComplexMatrix &f_bb, std::size_t n)
        {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < row.size(); ++k)
                acc += row[k] * f_bb(k, n);
            return std::norm(acc);
        }
    } // namespace

    void PowerConfig::validate() const
    {
        if (!(noise_var_user > 0.0) || !std::isfinite(noise_var_user))
            throw std::invalid_argument("power.noise_var_user must be positive");
        if (!(noise_var_eve > 0.0) || !std::isfinite(noise_var_eve))
            throw std::invalid_argument("power.noise_var_eve must be positive");
        if (std::isnan(p_b_db) || p_b_db == INFINITY)
            throw std::invalid_argument("power.p_b_db must be finite or -inf");
        if (std::isnan(p_j_db) || p_j_db == INFINITY)
            throw std::invalid_argument("power.p_j_db must be finite or -inf");
    }

    LinearPower LinearPower::from(const PowerConfig &p)
    {
        p.validate();
        return {db_to_linear(p.p_b_db), db_to_linear(p.p_j_db), p.noise_var_user, p.noise_var_eve};
    }

    std::string to_string(Connectivity c)
    {
        return c == Connectivity::fully_connected ? "fully" : "partially";
    }

    Connectivity connectivity_from_string(const std::string &name)
    {
        if (name == "fully")
            return Connectivity::fully_connected;
        if (name == "partially")
            return Connectivity::partially_connected;
        throw std::invalid_argument("unknown connectivity '" + name + "' (expected fully or partially)");
    }

    std::size_t EnergyModel::phase_shifters(std::size_t n_t) const noexcept
    {
        return connectivity == Connectivity::fully_connected ? n_t * n_rf : n_t;
    }

    void EnergyModel::validate() const
    {
        if (!(p_rf_mw > 0.0) || !(p_pa_mw > 0.0) || !(p_ps_mw > 0.0))
            throw std::invalid_argument("energy: p_rf_mw, p_pa_mw and p_ps_mw must be positive");
        if (n_rf == 0)
            throw std::invalid_argument("energy.n_rf must be at least 1");
    }

    double db_to_linear(double x_db)
    {
        return std::pow(10.0, x_db / 10.0);
    }

    double linear_to_db(double x)
    {
        return 10.0 * std::log10(x);
    }

    double rate(double sinr)
    {
        return std::log2(1.0 + sinr);
    }

    double secrecy(double c_u, std::span<const double> c_e)
    {
        if (c_e.empty())
            throw std::invalid_argument("secrecy: empty eavesdropper rate list");
        const double worst = *std::max_element(c_e.begin(), c_e.end());
        return std::max(c_u - worst, 0.0);
    }

    double sinr_user_mu(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                        const ComplexMatrix &f_bb, const LinearPower &power)
    {
        check_user(u, channels);
        state.validate_against(channels);
        check_precoder(channels, f_bb);

        const double per_stream = power.p_b / static_cast<double>(channels.users());
        const double jam_share = power.p_j / static_cast<double>(channels.users());
        const ComplexVector &w = state.w_user[u];

        const ComplexVector h_eff = combined_row(w, channels.bs_to_user[u], state);
        double interference = 0.0;
        for (std::size_t n = 0; n < channels.users(); ++n)
            if (n != u)
                interference += stream_gain(h_eff, f_bb, n);
        const double jam = std::norm(inner(w, matvec(channels.jammer_to_user[u], state.f_jam)));

        const double signal = per_stream * stream_gain(h_eff, f_bb, u);
        return signal / (power.noise_user * squared_norm(w) + jam_share * jam + per_stream * interference);
    }

    double sinr_user_mu(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                        const ComplexMatrix &f_bb, const PowerConfig &power)
    {
        return sinr_user_mu(u, channels, state, f_bb, LinearPower::from(power));
    }

    double sinr_eve_mu(std::size_t u, std::size_t eve, const ChannelSet &channels, const BeamformerState &state,
                       const ComplexMatrix &f_bb, const LinearPower &power)
    {
        check_user(u, channels);
        state.validate_against(channels);
        check_precoder(channels, f_bb);
        if (eve >= channels.eves())
            throw DimensionError("eavesdropper index " + std::to_string(eve) + " out of range");

        const double per_stream = power.p_b / static_cast<double>(channels.users());
        const ComplexVector &w = state.w_eve[eve];
        const ComplexVector g = combined_row(w, channels.bs_to_eve[eve], state);
        double interference = 0.0;
        for (std::size_t n = 0; n < channels.users(); ++n)
            if (n != u)
                interference += stream_gain(g, f_bb, n);

        const double signal = per_stream * stream_gain(g, f_bb, u);
        return signal / (power.noise_eve * squared_norm(w) + per_stream * interference);
    }

    double sinr_eve_mu(std::size_t u, std::size_t eve, const ChannelSet &channels, const BeamformerState &state,
                       const ComplexMatrix &f_bb, const PowerConfig &power)
    {
        return sinr_eve_mu(u, eve, channels, state, f_bb, LinearPower::from(power));
    }

    double secrecy_mu(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                      const ComplexMatrix &f_bb, const LinearPower &power)
    {
        std::vector<double> eve_rates;
        eve_rates.reserve(channels.eves());
        for (std::size_t m = 0; m < channels.eves(); ++m)
            eve_rates.push_back(rate(sinr_eve_mu(u, m, channels, state, f_bb, power)));
        return secrecy(rate(sinr_user_mu(u, channels, state, f_bb, power)), eve_rates);
    }

    SuRates su_rates(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                     const LinearPower &power)
    {
        check_user(u, channels);
        state.validate_against(channels);

        const double per_stream = power.p_b / static_cast<double>(channels.users());
        const double jam_share = power.p_j / static_cast<double>(channels.users());
        const ComplexVector &w = state.w_user[u];
        const ComplexVector &f = state.f_rf[u];

        const double psi_u = std::norm(inner(w, matvec(channels.bs_to_user[u], f)));
        const double psi_j = std::norm(inner(w, matvec(channels.jammer_to_user[u], state.f_jam)));

        SuRates r;
        r.user = rate(per_stream * psi_u / (power.noise_user * squared_norm(w) + jam_share * psi_j));
        r.eve = -INFINITY;
        for (std::size_t m = 0; m < channels.eves(); ++m)
        {
            const ComplexVector &we = state.w_eve[m];
            const double psi_e = std::norm(inner(we, matvec(channels.bs_to_eve[m], f)));
            const double c = rate(per_stream * psi_e / (power.noise_eve * squared_norm(we)));
            if (c > r.eve)
            {
                r.eve = c;
                r.strongest_eve = m;
            }
        }
        return r;
    }

    double secrecy_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                      const LinearPower &power)
    {
        return su_rates(u, channels, state, power).secrecy();
    }

    double secrecy_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                      const PowerConfig &power)
    {
        return secrecy_su(u, channels, state, LinearPower::from(power));
    }

    double energy_efficiency(double c_u, const PowerConfig &power, const EnergyModel &model, std::size_t n_t)
    {
        model.validate();
        if (c_u < 0.0)
            throw std::invalid_argument("energy_efficiency: negative rate");
        const double p_common_mw = db_to_linear(power.p_b_db);
        const double total_mw = p_common_mw + static_cast<double>(model.n_rf) * model.p_rf_mw +
                                static_cast<double>(n_t) * model.p_pa_mw +
                                static_cast<double>(model.phase_shifters(n_t)) * model.p_ps_mw;
        return c_u / total_mw;
    }

} // namespace secbeam
