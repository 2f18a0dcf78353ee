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


#ifndef SECBEAM_ANALOG_OPT_HPP
#define SECBEAM_ANALOG_OPT_HPP

#include "secbeam/beamformer.hpp"
#include "secbeam/channel.hpp"
#include "secbeam/metrics.hpp"
#include "secbeam/random.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace secbeam
{
    // The secrecy objective stopped being a finite number mid-ascent.
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct AscentConfig
    {
        double step_size_init = 0.1;   // delta
        double convergence_eps = 1e-7; // epsilon
        std::size_t max_iters = 5000;
        double step_shrink = 0.5; // delta multiplier after a decrease

        void validate() const;

        bool operator==(const AscentConfig &) const = default;
    };

    struct PowerAdaptConfig
    {
        double target_secrecy = 1.0; // zeta, bits/s/Hz
        double power_cap_db = 30.0;  // mu
        double adapt_rate = 0.01;    // kappa

        void validate() const;

        bool operator==(const PowerAdaptConfig &) const = default;
    };

    /// Gradient of the single-user secrecy gap with respect to conj(w_u).
    ///
    /// Returns the difference of the two user-rate fractions
    ///
    ///   (s2 w + a J w + b S w) / (s2 + a Psi_j + b Psi_u)  -  (s2 w + a J w) / (s2 + a Psi_j)
    ///
    /// with J = H_ju f_j f_j^H H_ju^H, S = H_u f_u f_u^H H_u^H, a = P_j/U,
    /// b = P_b/U and s2 = sigma_u^2 ||w||^2. The eavesdropper rate does not
    /// depend on w_u. The 1/ln 2 of the base-2 logarithm is left out: this is
    /// the gradient of ln(2) * (C_u - C_E), the same ascent direction.
    ComplexVector grad_w(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const LinearPower &power);
    ComplexVector grad_w(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const PowerConfig &power);

    /// Gradient of the single-user secrecy gap with respect to conj(f_rf[u]):
    ///
    ///   b H_u^H w w^H H_u f / (s2 + a Psi_j + b Psi_u) - b H_E^H w_E w_E^H H_E f / (s2_E + b Psi_E)
    ///
    /// against the currently strongest eavesdropper. Same ln 2 scaling as grad_w.
    ComplexVector grad_f(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const LinearPower &power);
    ComplexVector grad_f(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const PowerConfig &power);

    // Unit-norm then constant-amplitude projection: every entry ends with
    // modulus 1/sqrt(N) and keeps its phase. A zero entry becomes 1/sqrt(N).
    ComplexVector project(const ComplexVector &v);

    // Called after every update with the iteration number (1-based) and the new iterates.
    using IterateObserver = std::function<void(std::size_t, const ComplexVector &, const ComplexVector &)>;

    struct AscentResult
    {
        BeamformerState state;
        std::vector<double> trace; // C_s^SU after each iteration
        std::size_t iterations = 0;
        bool converged = false; // false when max_iters stopped the loop
        double final_secrecy = 0.0;
        double final_step = 0.0;
    };

    // Projected gradient ascent on (w_u, f_rf[u]) for fixed power. Both
    // gradients are taken at the same iterate. The stopping rule and the step
    // halving look at the unclamped gap C_u - C_E; a clamped objective is
    // flat whenever the eavesdropper is ahead.
    AscentResult ascend_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                           const LinearPower &power, const AscentConfig &cfg, const IterateObserver &observer = {});
    AscentResult ascend_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                           const PowerConfig &power, const AscentConfig &cfg, const IterateObserver &observer = {});

    struct PowerAdaptResult
    {
        BeamformerState state;
        PowerConfig power;            // p_b_db holds the final BS power
        double final_pb_linear = 0.0; // initial * (1 + kappa)^adaptations
        std::size_t cycles = 0;       // ascent runs performed
        std::size_t adaptations = 0;  // power increases applied
        bool success = false;         // target reached before the cap
        double final_secrecy = 0.0;
        std::size_t total_iterations = 0;
    };

    // Repeats ascend_su, raising linear P_b by (1 + kappa) after every cycle
    // that misses the target, until the target is met or the next power would
    // exceed the cap. The first cycle always runs. Beamformers carry over
    // between cycles; the step size restarts each cycle.
    PowerAdaptResult ascend_su_power_adapt(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                                           const PowerConfig &power, const AscentConfig &cfg,
                                           const PowerAdaptConfig &pcfg);

    // Complex Gaussian draws, projected. Order: eavesdropper combiners,
    // jammer precoder, then (w_u, f_u) per user.
    BeamformerState random_initial_state(const ChannelSet &channels, RandomStream &rng);

} // namespace secbeam

#endif
