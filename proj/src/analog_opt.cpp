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


#include "secbeam/analog_opt.hpp"

#include <cmath>
#include <string>

namespace secbeam
{
    namespace
    {
        // Per-iterate quantities shared by the objective and both gradients.
        struct SuTerms
        {
            ComplexVector hf{std::size_t{1}}; // H_u f
            ComplexVector hw{std::size_t{1}}; // H_u^H w
            Complex s_user;                   // w^H H_u f
            Complex s_jam;                    // w^H H_ju f_j
            Complex s_eve;                    // w_E^H H_E f, strongest eavesdropper
            std::size_t eve = 0;
            double noise_user = 0.0; // sigma_u^2 ||w||^2
            double denom_full = 0.0; // noise + a Psi_j + b Psi_u
            double denom_jam = 0.0;  // noise + a Psi_j
            double denom_eve = 0.0;  // sigma_E^2 ||w_E||^2 + b Psi_E
            double c_user = 0.0;
            double c_eve = 0.0;

            double gap() const noexcept { return c_user - c_eve; }
            double secrecy() const noexcept { return gap() > 0.0 ? gap() : 0.0; }
        };

        // Objective for one user with the fixed parts of the problem cached.
        class SuObjective
        {
        public:
            SuObjective(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                        const LinearPower &power)
                : h_(channels.bs_to_user.at(u)),
                  jam_(matvec(channels.jammer_to_user.at(u), state.f_jam)),
                  b_(power.p_b / static_cast<double>(channels.users())),
                  a_(power.p_j / static_cast<double>(channels.users())),
                  noise_user_(power.noise_user)
            {
                eve_dirs_.reserve(channels.eves());
                eve_noise_.reserve(channels.eves());
                for (std::size_t m = 0; m < channels.eves(); ++m)
                {
                    eve_dirs_.push_back(matvec_hermitian(channels.bs_to_eve[m], state.w_eve[m]));
                    eve_noise_.push_back(power.noise_eve * squared_norm(state.w_eve[m]));
                }
            }

            SuTerms evaluate(const ComplexVector &w, const ComplexVector &f) const
            {
                SuTerms t;
                t.hf = matvec(h_, f);
                t.hw = matvec_hermitian(h_, w);
                t.s_user = inner(w, t.hf);
                t.s_jam = inner(w, jam_);
                t.noise_user = noise_user_ * squared_norm(w);
                t.denom_jam = t.noise_user + a_ * std::norm(t.s_jam);
                t.denom_full = t.denom_jam + b_ * std::norm(t.s_user);
                t.c_user = std::log2(t.denom_full / t.denom_jam);

                t.c_eve = -INFINITY;
                for (std::size_t m = 0; m < eve_dirs_.size(); ++m)
                {
                    const Complex s = inner(eve_dirs_[m], f);
                    const double denom = eve_noise_[m] + b_ * std::norm(s);
                    const double c = std::log2(denom / eve_noise_[m]);
                    if (c > t.c_eve)
                    {
                        t.c_eve = c;
                        t.eve = m;
                        t.s_eve = s;
                        t.denom_eve = denom;
                    }
                }
                return t;
            }

            ComplexVector grad_w(const SuTerms &t, const ComplexVector &w) const
            {
                // J w = jam (jam^H w), S w = hf (hf^H w)
                const Complex jw = std::conj(t.s_jam);
                const Complex sw = std::conj(t.s_user);
                ComplexVector g(w.size());
                for (std::size_t k = 0; k < w.size(); ++k)
                {
                    const Complex common = noise_user_ * w[k] + a_ * jam_[k] * jw;
                    g[k] = (common + b_ * t.hf[k] * sw) / t.denom_full - common / t.denom_jam;
                }
                return g;
            }

            ComplexVector grad_f(const SuTerms &t, const ComplexVector &f) const
            {
                // hw^H f = w^H H f = s_user; he^H f = s_eve
                const ComplexVector &he = eve_dirs_[t.eve];
                ComplexVector g(f.size());
                for (std::size_t k = 0; k < f.size(); ++k)
                    g[k] = b_ * t.hw[k] * t.s_user / t.denom_full - b_ * he[k] * t.s_eve / t.denom_eve;
                return g;
            }

        private:
            const ComplexMatrix &h_;
            ComplexVector jam_;
            std::vector<ComplexVector> eve_dirs_;
            std::vector<double> eve_noise_;
            double b_;
            double a_;
            double noise_user_;
        };

        void check_user(std::size_t u, const ChannelSet &channels, const BeamformerState &state)
        {
            state.validate_against(channels);
            if (u >= channels.users())
                throw DimensionError("user index " + std::to_string(u) + " out of range for " +
                                     std::to_string(channels.users()) + " users");
        }

        ComplexVector step(const ComplexVector &x, double delta, const ComplexVector &g)
        {
            ComplexVector out = x;
            for (std::size_t k = 0; k < x.size(); ++k)
                out[k] += delta * g[k];
            return out;
        }
    } // namespace

    void AscentConfig::validate() const
    {
        if (!(step_size_init > 0.0))
            throw std::invalid_argument("ascent.step_size must be positive");
        if (!(convergence_eps > 0.0))
            throw std::invalid_argument("ascent.eps must be positive");
        if (max_iters == 0)
            throw std::invalid_argument("ascent.max_iters must be at least 1");
        if (!(step_shrink > 0.0 && step_shrink < 1.0))
            throw std::invalid_argument("ascent.step_shrink must lie in (0, 1)");
    }

    void PowerAdaptConfig::validate() const
    {
        if (!(target_secrecy >= 0.0) || !std::isfinite(target_secrecy))
            throw std::invalid_argument("power_adapt.target_secrecy must be non-negative");
        if (std::isnan(power_cap_db))
            throw std::invalid_argument("power_adapt.power_cap_db must be a number");
        if (!(adapt_rate > 0.0) || !std::isfinite(adapt_rate))
            throw std::invalid_argument("power_adapt.rate must be positive");
    }

    ComplexVector grad_w(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const LinearPower &power)
    {
        check_user(u, channels, state);
        const SuObjective objective(u, channels, state, power);
        return objective.grad_w(objective.evaluate(state.w_user[u], state.f_rf[u]), state.w_user[u]);
    }

    ComplexVector grad_w(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const PowerConfig &power)
    {
        return grad_w(u, channels, state, LinearPower::from(power));
    }

    ComplexVector grad_f(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const LinearPower &power)
    {
        check_user(u, channels, state);
        const SuObjective objective(u, channels, state, power);
        return objective.grad_f(objective.evaluate(state.w_user[u], state.f_rf[u]), state.f_rf[u]);
    }

    ComplexVector grad_f(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                         const PowerConfig &power)
    {
        return grad_f(u, channels, state, LinearPower::from(power));
    }

    ComplexVector project(const ComplexVector &v)
    {
        const std::size_t n = v.size();
        const double amp = 1.0 / std::sqrt(static_cast<double>(n));
        const double norm = two_norm(v);

        ComplexVector out(n, Complex(amp, 0.0));
        if (!(norm > 0.0) || !std::isfinite(norm))
            return out;
        for (std::size_t k = 0; k < n; ++k)
        {
            const Complex x = v[k] / norm;
            const double mag = std::abs(x);
            if (mag > 0.0)
                out[k] = x * (amp / mag);
        }
        return out;
    }

    AscentResult ascend_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                           const LinearPower &power, const AscentConfig &cfg, const IterateObserver &observer)
    {
        cfg.validate();
        check_user(u, channels, state);

        const SuObjective objective(u, channels, state, power);
        ComplexVector w = state.w_user[u];
        ComplexVector f = state.f_rf[u];
        SuTerms terms = objective.evaluate(w, f);
        double previous = terms.gap();
        if (!std::isfinite(previous))
            throw NumericalError("ascend_su: non-finite initial secrecy for user " + std::to_string(u));

        AscentResult result;
        double delta = cfg.step_size_init;
        for (std::size_t it = 1; it <= cfg.max_iters; ++it)
        {
            const ComplexVector gw = objective.grad_w(terms, w);
            const ComplexVector gf = objective.grad_f(terms, f);
            w = project(step(w, delta, gw));
            f = project(step(f, delta, gf));
            terms = objective.evaluate(w, f);

            const double current = terms.gap();
            if (!std::isfinite(current))
                throw NumericalError("ascend_su: secrecy became non-finite at iteration " + std::to_string(it) +
                                     " for user " + std::to_string(u) + " (step " + std::to_string(delta) + ")");
            result.trace.push_back(terms.secrecy());
            result.iterations = it;
            if (observer)
                observer(it, w, f);

            if (current < previous)
                delta *= cfg.step_shrink;
            const bool done = std::abs(current - previous) <= cfg.convergence_eps;
            previous = current;
            if (done)
            {
                result.converged = true;
                break;
            }
        }

        result.state = state;
        result.state.w_user[u] = std::move(w);
        result.state.f_rf[u] = std::move(f);
        result.final_secrecy = terms.secrecy();
        result.final_step = delta;
        return result;
    }

    AscentResult ascend_su(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                           const PowerConfig &power, const AscentConfig &cfg, const IterateObserver &observer)
    {
        return ascend_su(u, channels, state, LinearPower::from(power), cfg, observer);
    }

    PowerAdaptResult ascend_su_power_adapt(std::size_t u, const ChannelSet &channels, const BeamformerState &state,
                                           const PowerConfig &power, const AscentConfig &cfg,
                                           const PowerAdaptConfig &pcfg)
    {
        pcfg.validate();
        LinearPower lp = LinearPower::from(power);
        const double initial = lp.p_b;
        const double cap = db_to_linear(pcfg.power_cap_db);
        const double growth = 1.0 + pcfg.adapt_rate;

        PowerAdaptResult result;
        result.state = state;
        for (;;)
        {
            lp.p_b = initial * std::pow(growth, static_cast<double>(result.adaptations));
            const AscentResult cycle = ascend_su(u, channels, result.state, lp, cfg);
            result.state = cycle.state;
            result.final_secrecy = cycle.final_secrecy;
            result.total_iterations += cycle.iterations;
            ++result.cycles;

            if (cycle.final_secrecy >= pcfg.target_secrecy)
            {
                result.success = true;
                break;
            }
            if (initial * std::pow(growth, static_cast<double>(result.adaptations + 1)) > cap)
                break;
            ++result.adaptations;
        }

        result.final_pb_linear = lp.p_b;
        result.power = power;
        result.power.p_b_db = linear_to_db(lp.p_b);
        return result;
    }

    BeamformerState random_initial_state(const ChannelSet &channels, RandomStream &rng)
    {
        channels.validate();
        BeamformerState s;
        for (std::size_t m = 0; m < channels.eves(); ++m)
            s.w_eve.push_back(project(rng.complex_normal_vector(channels.bs_to_eve[m].rows())));
        s.f_jam = project(rng.complex_normal_vector(channels.n_j()));
        for (std::size_t u = 0; u < channels.users(); ++u)
        {
            s.w_user.push_back(project(rng.complex_normal_vector(channels.bs_to_user[u].rows())));
            s.f_rf.push_back(project(rng.complex_normal_vector(channels.bs_to_user[u].cols())));
        }
        return s;
    }

} // namespace secbeam
