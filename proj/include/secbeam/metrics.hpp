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


#ifndef SECBEAM_METRICS_HPP
#define SECBEAM_METRICS_HPP

#include "secbeam/beamformer.hpp"
#include "secbeam/channel.hpp"
#include "secbeam/linalg.hpp"

#include <cstddef>
#include <span>
#include <string>

namespace secbeam
{
    // Transmit powers in dB, noise variances linear. A jammer power of -inf dB
    // switches the jammer off.
    struct PowerConfig
    {
        double p_b_db = 5.0;
        double p_j_db = -10.0;
        double noise_var_user = 1.0;
        double noise_var_eve = 1.0;

        void validate() const;

        bool operator==(const PowerConfig &) const = default;
    };

    // Same quantities, all linear. The optimizer works on this form so that
    // power adaptation can scale P_b without a dB round trip.
    struct LinearPower
    {
        double p_b = 1.0;
        double p_j = 0.0;
        double noise_user = 1.0;
        double noise_eve = 1.0;

        static LinearPower from(const PowerConfig &p);
    };

    enum class Connectivity
    {
        fully_connected,
        partially_connected
    };

    std::string to_string(Connectivity c);
    Connectivity connectivity_from_string(const std::string &name);

    struct EnergyModel
    {
        double p_rf_mw = 100.0;
        double p_pa_mw = 100.0;
        double p_ps_mw = 10.0;
        std::size_t n_rf = 5;
        Connectivity connectivity = Connectivity::fully_connected;

        // Phase shifter count: N_t N_RF when fully connected, N_t otherwise.
        std::size_t phase_shifters(std::size_t n_t) const noexcept;

        void validate() const;

        bool operator==(const EnergyModel &) const = default;
    };

    double db_to_linear(double x_db);
    double linear_to_db(double x);

    // log2(1 + sinr)
    double rate(double sinr);

    // max(c_u - max(c_e), 0). Throws std::invalid_argument on an empty list.
    double secrecy(double c_u, std::span<const double> c_e);

    // ---- multi-user expressions (full inter-user interference) ----
    //
    // Noise after combining is sigma^2 ||w||^2, which is sigma^2 for the
    // unit-norm combiners the optimizer produces.

    double sinr_user_mu(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                        const ComplexMatrix &f_bb, const LinearPower &power);
    double sinr_user_mu(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                        const ComplexMatrix &f_bb, const PowerConfig &power);

    // Eavesdropper `eve` listening to stream u; the jammer does not reach it.
    double sinr_eve_mu(std::size_t u, std::size_t eve, const ChannelSet &channels, const BeamformerState &state,
                       const ComplexMatrix &f_bb, const LinearPower &power);
    double sinr_eve_mu(std::size_t u, std::size_t eve, const ChannelSet &channels, const BeamformerState &state,
                       const ComplexMatrix &f_bb, const PowerConfig &power);

    // Secrecy of stream u against the strongest eavesdropper.
    double secrecy_mu(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                      const ComplexMatrix &f_bb, const LinearPower &power);

    // ---- single-user expressions (inter-user interference ignored) ----

    struct SuRates
    {
        double user = 0.0;    // C_u^SU
        double eve = 0.0;     // max over eavesdroppers of C_E^SU
        std::size_t strongest_eve = 0;

        double gap() const noexcept { return user - eve; }
        double secrecy() const noexcept { return gap() > 0.0 ? gap() : 0.0; }
    };

    SuRates su_rates(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                     const LinearPower &power);

    double secrecy_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                      const LinearPower &power);
    double secrecy_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                      const PowerConfig &power);

    // Secrecy rate per unit consumed power, bits/s/Hz per mW. P_b is read as
    // dBm for the common-power term.
    double energy_efficiency(double c_u, const PowerConfig &power, const EnergyModel &model, std::size_t n_t);

} // namespace secbeam

#endif
