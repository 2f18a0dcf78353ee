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


#include "secbeam/config_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <limits>

using namespace secbeam;
namespace fs = std::filesystem;

namespace
{
    std::string error_of(const std::string &text, const ConfigOverrides &ov = {})
    {
        try
        {
            parse_config(text, ov);
        }
        catch (const ConfigError &e)
        {
            return e.what();
        }
        return "";
    }

    fs::path scratch_dir(const std::string &name)
    {
        const fs::path dir = fs::temp_directory_path() / ("secbeam_test_" + name);
        fs::remove_all(dir);
        return dir;
    }

    CampaignResult sample_curve(bool variable_power)
    {
        CampaignResult r;
        r.label = "mmse";
        r.config = ScenarioConfig::defaults(Band::sub6);
        r.config.sweep = SweepAxis::snr(-10, -9, 1);
        r.variable_power = variable_power;
        r.points.push_back(CurvePoint{-10.0, 1.0 / 3.0, 2.5e-5, 999, 1, 26.5, 9.61234567891, 1.0});
        r.points.push_back(CurvePoint{-9.0, 12345.678912345, 0.0, 1000, 0, 1.0, -10.0, 1.0});
        return r;
    }
} // namespace

TEST(ParseConfig, EmptyGivesMmwaveDefaults)
{
    const ScenarioConfig c = parse_config("");
    EXPECT_EQ(c, ScenarioConfig::defaults(Band::mmwave));
    EXPECT_EQ(c.channel.n_clusters, 4u);
    EXPECT_EQ(c.channel.n_rays, 15u);
    EXPECT_EQ(c.trials, 1000u);
}

TEST(ParseConfig, BandSelectsDefaults)
{
    EXPECT_EQ(parse_config("band = sub6\n"), ScenarioConfig::defaults(Band::sub6));
    EXPECT_EQ(parse_config("band=mmwave"), ScenarioConfig::defaults(Band::mmwave));
}

TEST(ParseConfig, CommentsAndWhitespace)
{
    const ScenarioConfig c = parse_config("# scenario\n\n  users = 3   # three users\n\tchannel.n_rays=7\r\n");
    EXPECT_EQ(c.users, 3u);
    EXPECT_EQ(c.channel.n_rays, 7u);
}

TEST(ParseConfig, SnrFlagGivesElevenPoints)
{
    const ScenarioConfig c = parse_config("", {{"sweep", "snr:0:10:1"}});
    EXPECT_EQ(c.axis_points(), 11u);
}

TEST(ParseConfig, Precedence)
{
    const std::string file = "band = sub6\ntrials = 50\nusers = 4\n";
    const ScenarioConfig c = parse_config(file, {{"trials", "7"}});
    EXPECT_EQ(c.trials, 7u);    // flag over file
    EXPECT_EQ(c.users, 4u);     // file over default
    EXPECT_EQ(c.n_t, 16u);      // band default
    EXPECT_EQ(parse_config(file, {{"band", "mmwave"}}).n_t, 64u);
}

TEST(ParseConfig, PowerAdaptSwitch)
{
    EXPECT_FALSE(parse_config("").power_adapt);
    EXPECT_TRUE(parse_config("power_adapt = on").power_adapt);
    const ScenarioConfig implied = parse_config("power_adapt.target_secrecy = 2");
    ASSERT_TRUE(implied.power_adapt);
    EXPECT_EQ(implied.power_adapt->target_secrecy, 2.0);
    EXPECT_EQ(implied.power_adapt->adapt_rate, 0.01);
    EXPECT_FALSE(parse_config("power_adapt = off\npower_adapt.rate = 0.5").power_adapt);
}

TEST(ParseConfig, SpecialValues)
{
    const ScenarioConfig c = parse_config("power.p_j_db = -inf\nenergy.n_rf = auto\nseed = 18446744073709551615");
    EXPECT_EQ(c.power.p_j_db, -std::numeric_limits<double>::infinity());
    EXPECT_EQ(c.energy.n_rf, 0u);
    EXPECT_EQ(c.master_seed, std::numeric_limits<std::uint64_t>::max());
    EXPECT_EQ(parse_config("energy.n_rf = 8").energy.n_rf, 8u);
}

TEST(ParseConfig, ErrorsNameTheKey)
{
    EXPECT_NE(error_of("trials = -5").find("trials"), std::string::npos);
    EXPECT_NE(error_of("trials = 0").find("trials"), std::string::npos);
    EXPECT_NE(error_of("n_t = 12x").find("n_t"), std::string::npos);
    EXPECT_NE(error_of("colour = red").find("unknown key 'colour'"), std::string::npos);
    EXPECT_NE(error_of("band = lte").find("band"), std::string::npos);
    EXPECT_NE(error_of("channel.angular_spread_deg = 0").find("angular_spread_deg"), std::string::npos);
    EXPECT_NE(error_of("power.noise_var_user = nan").find("power.noise_var_user"), std::string::npos);
    EXPECT_NE(error_of("ascent.step_shrink = 2").find("step_shrink"), std::string::npos);
    EXPECT_NE(error_of("filter = wiener").find("filter"), std::string::npos);
    EXPECT_NE(error_of("power_adapt = maybe").find("power_adapt"), std::string::npos);
    EXPECT_NE(error_of("energy.connectivity = hybrid").find("energy.connectivity"), std::string::npos);
    EXPECT_NE(error_of("users = 2\nusers = 3").find("duplicate key 'users'"), std::string::npos);
    EXPECT_NE(error_of("just some words").find("line 1"), std::string::npos);
    EXPECT_NE(error_of("", {{"trials", "-5"}}).find("trials"), std::string::npos);
}

TEST(ParseConfig, InconsistentDimensions)
{
    const std::string e = error_of("band = sub6\nusers = 20");
    EXPECT_NE(e.find("users"), std::string::npos);
    EXPECT_NE(e.find("n_t"), std::string::npos);
    EXPECT_NE(error_of("band = sub6\nsweep = users:1:17").find("users"), std::string::npos);
}

TEST(ParseConfig, ErrorsAreOneLine)
{
    for (const std::string text : {"trials = -5", "colour = red", "band = sub6\nusers = 20", "sweep = snr:1"})
    {
        const std::string e = error_of(text);
        EXPECT_FALSE(e.empty()) << text;
        EXPECT_EQ(e.find('\n'), std::string::npos) << text;
    }
}

TEST(ParseConfig, MissingFile)
{
    EXPECT_THROW(parse_config_file("/nonexistent/secbeam.cfg"), ConfigError);
}

TEST(EmitConfig, RoundTripsDefaultsAndEdits)
{
    std::vector<ScenarioConfig> configs = {ScenarioConfig::defaults(Band::mmwave),
                                           ScenarioConfig::defaults(Band::sub6)};
    ScenarioConfig edited = ScenarioConfig::defaults(Band::sub6);
    edited.power.p_b_db = 0.1 + 0.2;
    edited.power.p_j_db = -std::numeric_limits<double>::infinity();
    edited.channel.angular_spread_deg = 7.123456789012345;
    edited.channel.array = ArrayKind::uniform_planar;
    edited.energy.connectivity = Connectivity::partially_connected;
    edited.energy.n_rf = 6;
    edited.power_adapt = PowerAdaptConfig{1.25, 28.5, 0.015};
    edited.sweep = SweepAxis::snr(-10.5, 10, 0.1);
    edited.filter = Filter::zf;
    edited.master_seed = 1234567890123456789ULL;
    configs.push_back(edited);
    edited.sweep = SweepAxis::users(2, 8);
    configs.push_back(edited);

    for (const auto &c : configs)
    {
        const std::string text = emit_config(c);
        EXPECT_EQ(parse_config(text), c) << text;
        EXPECT_EQ(emit_config(parse_config(text)), text);
    }
}

TEST(EmitConfig, EveryKeyAppearsOnce)
{
    ScenarioConfig c = ScenarioConfig::defaults(Band::mmwave);
    c.power_adapt = PowerAdaptConfig{};
    const std::string text = emit_config(c);
    for (const auto &key : config_keys())
    {
        const bool first = text.rfind(key + " = ", 0) == 0;
        EXPECT_TRUE(first || text.find("\n" + key + " = ") != std::string::npos) << key;
    }
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(config_keys().size()));
}

TEST(Csv, HeaderAndSignificantDigits)
{
    const std::string csv = format_csv(sample_curve(false));
    EXPECT_EQ(csv, "axis,mean_secrecy_bps_hz,mean_ee_bits_hz_mw,trials,failures\n"
                   "-10,0.333333333,2.5e-05,999,1\n"
                   "-9,12345.6789,0,1000,0\n");
}

TEST(Csv, VariablePowerColumns)
{
    const std::string csv = format_csv(sample_curve(true));
    EXPECT_EQ(csv, "axis,mean_secrecy_bps_hz,mean_ee_bits_hz_mw,trials,failures,cycles,final_pb_db\n"
                   "-10,0.333333333,2.5e-05,999,1,26.5,9.61234568\n"
                   "-9,12345.6789,0,1000,0,1,-10\n");
}

TEST(Csv, SinglePointIsTwoLines)
{
    CampaignResult r = sample_curve(false);
    r.points.pop_back();
    const std::string csv = format_csv(r);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Csv, FilesPerCurvePlusPlot)
{
    const fs::path dir = scratch_dir("csv");
    std::vector<CampaignResult> curves;
    for (const char *label : {"zf", "mmse", "mrt", "su"})
    {
        curves.push_back(sample_curve(false));
        curves.back().label = label;
    }
    const auto written = emit_csv(curves, dir);
    ASSERT_EQ(written.size(), 5u);
    for (const char *name : {"zf.csv", "mmse.csv", "mrt.csv", "su.csv", "plot.gp"})
        EXPECT_TRUE(fs::exists(dir / name)) << name;
    const std::string plot = read_text(dir / "plot.gp");
    for (const char *name : {"'zf.csv'", "'mmse.csv'", "'mrt.csv'", "'su.csv'"})
        EXPECT_NE(plot.find(name), std::string::npos);
    EXPECT_NE(plot.find("SNR (dB)"), std::string::npos);
    EXPECT_EQ(read_text(dir / "zf.csv"), format_csv(curves[0]));
    fs::remove_all(dir);
}

TEST(Csv, UnwritableDirectoryThrows)
{
    const fs::path dir = scratch_dir("blocked");
    write_text(dir.string() + ".file", "x");
    EXPECT_THROW(emit_csv({sample_curve(false)}, dir.string() + ".file"), std::runtime_error);
    fs::remove(dir.string() + ".file");
}

TEST(Manifest, RoundTrip)
{
    RunManifest m;
    m.command = "sweep-snr";
    m.config_path = "scenarios/snr_sweep.cfg";
    m.filters = {Filter::zf, Filter::mmse, Filter::mrt};
    m.include_su = true;
    m.config = ScenarioConfig::defaults(Band::mmwave);
    m.config.sweep = SweepAxis::snr(-10, 10, 1);
    m.config.master_seed = 77;
    m.output_dir = "out/snr_sweep";
    m.timestamp = "2026-01-02T03:04:05Z";
    m.tool_version = "0.3.0";

    const std::string text = format_manifest(m);
    const RunManifest back = parse_manifest(text);
    EXPECT_EQ(back.command, m.command);
    EXPECT_EQ(back.config_path, m.config_path);
    EXPECT_EQ(back.filters, m.filters);
    EXPECT_EQ(back.include_su, m.include_su);
    EXPECT_EQ(back.config, m.config);
    EXPECT_EQ(back.output_dir, m.output_dir);
    EXPECT_EQ(back.timestamp, m.timestamp);
    EXPECT_EQ(back.tool_version, m.tool_version);
    EXPECT_EQ(back.master_seed(), 77u);
    EXPECT_EQ(format_manifest(back), text);
}

TEST(Manifest, Errors)
{
    EXPECT_THROW(parse_manifest("band = sub6\n"), ConfigError);
    EXPECT_THROW(parse_manifest("manifest.command = single\nmanifest.colour = red\n"), ConfigError);
    EXPECT_THROW(parse_manifest("manifest.command = single\nmanifest.filters = zf,wiener\n"), ConfigError);
}
