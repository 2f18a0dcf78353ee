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


#include "oracles.hpp"
#include "test_support.hpp"

#include "secbeam/analog_opt.hpp"
#include "secbeam/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace secbeam;
using testing_support::Draws;

namespace
{
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();

    // Every link a 1x1 unit gain, every beamformer [1].
    struct ScalarSystem
    {
        ChannelSet channels;
        BeamformerState state;

        ScalarSystem()
        {
            const ComplexMatrix one(1, 1, {1.0});
            channels.bs_to_user = {one};
            channels.bs_to_eve = {one};
            channels.jammer_to_user = {one};
            state.w_user = {ComplexVector{1.0}};
            state.f_rf = {ComplexVector{1.0}};
            state.w_eve = {ComplexVector{1.0}};
            state.f_jam = ComplexVector{1.0};
        }
    };

    PowerConfig powers(double p_b_db, double p_j_db)
    {
        PowerConfig p;
        p.p_b_db = p_b_db;
        p.p_j_db = p_j_db;
        return p;
    }

    struct RandomSystem
    {
        ChannelSet channels;
        BeamformerState state;
        ComplexMatrix f_bb;

        RandomSystem(unsigned seed, std::size_t users, std::size_t eves, std::size_t n_t, std::size_t n_r,
                     std::size_t n_j)
            : f_bb(users, users)
        {
            Draws d(seed);
            for (std::size_t u = 0; u < users; ++u)
            {
                channels.bs_to_user.push_back(d.matrix(n_r, n_t));
                channels.jammer_to_user.push_back(d.matrix(n_r, n_j));
                state.w_user.push_back(project(d.vector(n_r)));
                state.f_rf.push_back(project(d.vector(n_t)));
            }
            for (std::size_t m = 0; m < eves; ++m)
            {
                channels.bs_to_eve.push_back(d.matrix(n_r, n_t));
                state.w_eve.push_back(project(d.vector(n_r)));
            }
            state.f_jam = project(d.vector(n_j));
            f_bb = d.matrix(users, users);
        }
    };

    oracle::Powers linear(const PowerConfig &p)
    {
        return {std::pow(10.0, p.p_b_db / 10.0), std::pow(10.0, p.p_j_db / 10.0), p.noise_var_user,
                p.noise_var_eve};
    }
} // namespace

TEST(Conversions, DbToLinear)
{
    EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
    EXPECT_DOUBLE_EQ(db_to_linear(10.0), 10.0);
    EXPECT_NEAR(db_to_linear(-20.0), 0.01, 1e-17);
    EXPECT_EQ(db_to_linear(neg_inf), 0.0);
    EXPECT_NEAR(linear_to_db(db_to_linear(7.3)), 7.3, 1e-12);
}

TEST(Rate, Examples)
{
    EXPECT_EQ(rate(0.0), 0.0);
    EXPECT_DOUBLE_EQ(rate(1.0), 1.0);
    EXPECT_DOUBLE_EQ(rate(3.0), 2.0);
}

TEST(Rate, Monotone)
{
    double prev = rate(0.0);
    for (double s = 0.01; s < 1e4; s *= 1.3)
    {
        EXPECT_GT(rate(s), prev);
        prev = rate(s);
    }
}

TEST(Secrecy, Examples)
{
    const double one[] = {0.5};
    const double ahead[] = {0.7};
    const double two[] = {0.2, 0.8};
    EXPECT_DOUBLE_EQ(secrecy(2.0, one), 1.5);
    EXPECT_EQ(secrecy(0.3, ahead), 0.0);
    EXPECT_NEAR(secrecy(1.0, two), 0.2, 1e-15);
}

TEST(Secrecy, NonNegativeAndZeroOnTie)
{
    Draws d(41);
    for (int k = 0; k < 100; ++k)
    {
        const double c = d.uniform(0.0, 5.0);
        const double e[] = {d.uniform(0.0, 5.0), d.uniform(0.0, 5.0)};
        EXPECT_GE(secrecy(c, e), 0.0);
        const double same[] = {c};
        EXPECT_EQ(secrecy(c, same), 0.0);
    }
}

TEST(Secrecy, EmptyEavesdropperListThrows)
{
    EXPECT_THROW(secrecy(1.0, std::span<const double>{}), std::invalid_argument);
}

TEST(PowerConfig, Validation)
{
    EXPECT_NO_THROW(powers(5.0, neg_inf).validate());
    PowerConfig p;
    p.noise_var_user = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = PowerConfig{};
    p.p_b_db = std::nan("");
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(SinrUser, ScalarUnitGainsNoJammer)
{
    ScalarSystem s;
    const ComplexMatrix f_bb(1, 1, {1.0});
    EXPECT_DOUBLE_EQ(sinr_user_mu(0, s.channels, s.state, f_bb, powers(0.0, neg_inf)), 1.0);
}

TEST(SinrUser, ScalarUnitGainsWithJammer)
{
    ScalarSystem s;
    const ComplexMatrix f_bb(1, 1, {1.0});
    EXPECT_DOUBLE_EQ(sinr_user_mu(0, s.channels, s.state, f_bb, powers(0.0, 0.0)), 0.5);
}

TEST(SinrUser, MatchesScalarLoopOracle)
{
    for (unsigned seed = 0; seed < 10; ++seed)
    {
        RandomSystem r(100 + seed, 3, 1, 6, 2, 3);
        const PowerConfig p = powers(3.0, -4.0);
        for (std::size_t u = 0; u < 3; ++u)
        {
            const double ref = oracle::mu_sinr_user(u, r.channels, r.state, oracle::to_nested(r.f_bb), linear(p));
            EXPECT_NEAR(sinr_user_mu(u, r.channels, r.state, r.f_bb, p), ref, 1e-12 * std::max(1.0, ref));
        }
    }
}

TEST(SinrUser, InvariantToCombinerPhase)
{
    RandomSystem r(42, 3, 1, 8, 4, 2);
    const PowerConfig p = powers(5.0, -10.0);
    const double base = sinr_user_mu(1, r.channels, r.state, r.f_bb, p);
    for (double theta : {0.3, 1.7, -2.9})
    {
        BeamformerState rotated = r.state;
        rotated.w_user[1] *= std::polar(1.0, theta);
        EXPECT_NEAR(sinr_user_mu(1, r.channels, rotated, r.f_bb, p), base, 1e-12 * std::max(1.0, base));
    }
}

TEST(SinrUser, DimensionMismatchThrows)
{
    RandomSystem r(43, 2, 1, 4, 2, 2);
    EXPECT_THROW(sinr_user_mu(0, r.channels, r.state, ComplexMatrix(3, 3), PowerConfig{}), DimensionError);
    EXPECT_THROW(sinr_user_mu(5, r.channels, r.state, r.f_bb, PowerConfig{}), DimensionError);
}

TEST(SinrEve, ZeroColumnGivesZero)
{
    RandomSystem r(44, 2, 1, 4, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        r.f_bb(i, 0) = 0.0;
    EXPECT_EQ(sinr_eve_mu(0, 0, r.channels, r.state, r.f_bb, PowerConfig{}), 0.0);
}

TEST(SinrEve, ScalarUnitGains)
{
    ScalarSystem s;
    EXPECT_DOUBLE_EQ(sinr_eve_mu(0, 0, s.channels, s.state, ComplexMatrix(1, 1, {1.0}), powers(0.0, 20.0)), 1.0);
}

TEST(SinrEve, MatchesScalarLoopOracle)
{
    for (unsigned seed = 0; seed < 10; ++seed)
    {
        RandomSystem r(200 + seed, 3, 2, 6, 2, 3);
        const PowerConfig p = powers(-2.0, 1.0);
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t m = 0; m < 2; ++m)
            {
                const double ref =
                    oracle::mu_sinr_eve(u, m, r.channels, r.state, oracle::to_nested(r.f_bb), linear(p));
                EXPECT_NEAR(sinr_eve_mu(u, m, r.channels, r.state, r.f_bb, p), ref, 1e-12 * std::max(1.0, ref));
            }
    }
}

TEST(SecrecyMu, StrongestEavesdropperCounts)
{
    RandomSystem r(45, 2, 3, 6, 2, 2);
    const PowerConfig p = powers(4.0, -6.0);
    const LinearPower lp = LinearPower::from(p);
    double c_e = 0.0;
    for (std::size_t m = 0; m < 3; ++m)
        c_e = std::max(c_e, rate(sinr_eve_mu(1, m, r.channels, r.state, r.f_bb, lp)));
    const double c_u = rate(sinr_user_mu(1, r.channels, r.state, r.f_bb, lp));
    EXPECT_NEAR(secrecy_mu(1, r.channels, r.state, r.f_bb, lp), std::max(c_u - c_e, 0.0), 1e-14);
}

TEST(SecrecySu, NoJammerNoEavesdropper)
{
    RandomSystem r(46, 1, 1, 4, 2, 2);
    r.channels.bs_to_eve[0] = ComplexMatrix(2, 4);
    const PowerConfig p = powers(3.0, neg_inf);
    const double g = std::norm(inner(r.state.w_user[0], matvec(r.channels.bs_to_user[0], r.state.f_rf[0])));
    EXPECT_NEAR(secrecy_su(0, r.channels, r.state, p), std::log2(1.0 + db_to_linear(3.0) * g), 1e-13);
}

TEST(SecrecySu, ZeroSignalGivesZero)
{
    ScalarSystem s;
    s.channels.bs_to_user[0] = ComplexMatrix(1, 1);
    EXPECT_EQ(secrecy_su(0, s.channels, s.state, powers(5.0, -10.0)), 0.0);
}

TEST(SecrecySu, MatchesScalarLoopOracle)
{
    for (unsigned seed = 0; seed < 20; ++seed)
    {
        RandomSystem r(300 + seed, 2, 1, 2, 2, 2);
        const PowerConfig p = powers(6.0, -3.0);
        for (std::size_t u = 0; u < 2; ++u)
        {
            const double ref = std::max(oracle::su_gap(u, r.channels, r.state, linear(p)), 0.0);
            EXPECT_NEAR(secrecy_su(u, r.channels, r.state, p), ref, 1e-13);
            const SuRates rates = su_rates(u, r.channels, r.state, LinearPower::from(p));
            EXPECT_NEAR(rates.gap(), oracle::su_gap(u, r.channels, r.state, linear(p)), 1e-13);
        }
    }
}

TEST(SecrecySu, SingleUserMultiUserAgree)
{
    for (unsigned seed = 0; seed < 20; ++seed)
    {
        RandomSystem r(400 + seed, 1, 1, 6, 3, 2);
        // One stream: any unit-modulus baseband scalar keeps ||F_RF f_bb|| = 1.
        const ComplexMatrix f_bb(1, 1, {std::polar(1.0, 0.1 * seed)});
        const PowerConfig p = powers(2.0, -5.0);
        const LinearPower lp = LinearPower::from(p);
        const SuRates su = su_rates(0, r.channels, r.state, lp);
        EXPECT_NEAR(rate(sinr_user_mu(0, r.channels, r.state, f_bb, lp)), su.user, 1e-12);
        EXPECT_NEAR(rate(sinr_eve_mu(0, 0, r.channels, r.state, f_bb, lp)), su.eve, 1e-12);
    }
}

TEST(EnergyEfficiency, ZeroRate)
{
    EXPECT_EQ(energy_efficiency(0.0, PowerConfig{}, EnergyModel{}, 64), 0.0);
}

TEST(EnergyEfficiency, UnitHardware)
{
    const EnergyModel m{1.0, 1.0, 1.0, 1, Connectivity::fully_connected};
    EXPECT_DOUBLE_EQ(energy_efficiency(1.0, powers(0.0, 0.0), m, 1), 0.25);
}

TEST(EnergyEfficiency, ReferenceHardwareHandValue)
{
    // 10^0.5 mW + 5 * 100 + 64 * 100 + (64 * 5) * 10 = 10103.16227766 mW
    const EnergyModel m{100.0, 100.0, 10.0, 5, Connectivity::fully_connected};
    EXPECT_NEAR(energy_efficiency(1.0, powers(5.0, -10.0), m, 64), 1.0 / 10103.16227766017, 1e-15);
    EXPECT_NEAR(1.0 / energy_efficiency(1.0, powers(5.0, -10.0), m, 64),
                db_to_linear(5.0) + oracle::circuit_power_mw(100, 100, 10, 5, 64, true), 1e-9);
}

TEST(EnergyEfficiency, PartialConnectivityUsesOneShifterPerAntenna)
{
    const EnergyModel m{100.0, 100.0, 10.0, 5, Connectivity::partially_connected};
    EXPECT_EQ(m.phase_shifters(64), 64u);
    EXPECT_NEAR(1.0 / energy_efficiency(1.0, powers(5.0, -10.0), m, 64),
                db_to_linear(5.0) + oracle::circuit_power_mw(100, 100, 10, 5, 64, false), 1e-9);
}

TEST(EnergyEfficiency, DecreasesWithAntennas)
{
    const EnergyModel m{};
    double prev = energy_efficiency(2.0, PowerConfig{}, m, 1);
    for (std::size_t n_t = 2; n_t <= 128; ++n_t)
    {
        const double e = energy_efficiency(2.0, PowerConfig{}, m, n_t);
        EXPECT_LT(e, prev);
        prev = e;
    }
}

TEST(EnergyModel, Validation)
{
    EnergyModel m;
    EXPECT_NO_THROW(m.validate());
    m.p_ps_mw = 0.0;
    EXPECT_THROW(m.validate(), std::invalid_argument);
    EXPECT_THROW(connectivity_from_string("hybrid"), std::invalid_argument);
    EXPECT_EQ(connectivity_from_string(to_string(Connectivity::partially_connected)),
              Connectivity::partially_connected);
}
