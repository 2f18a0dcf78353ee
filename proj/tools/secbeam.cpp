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


// secbeam command line front end.
//
//   secbeam sweep-snr   [--snr A:B:STEP] [--filter zf|mmse|mrt|all] ...
//   secbeam sweep-users [--users A:B] ...
//   secbeam power-adapt [--target-secrecy X] [--power-cap DB] ...
//   secbeam single      ...
//   secbeam replay      --manifest PATH [--out DIR]
//
// Exit status: 0 on success, 1 on invalid input, 2 when more than 1% of the
// trials at some axis point failed.

#include "secbeam/config_io.hpp"
#include "secbeam/montecarlo.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#ifndef SECBEAM_VERSION
#define SECBEAM_VERSION "unknown"
#endif

namespace
{
    using namespace secbeam;

    constexpr int exit_ok = 0;
    constexpr int exit_invalid = 1;
    constexpr int exit_campaign_failed = 2;

    struct CommonOptions
    {
        std::string config_path;
        std::optional<std::string> band;
        std::optional<std::string> filter;
        std::optional<std::string> snr;
        std::optional<std::string> users;
        std::optional<std::size_t> trials;
        std::optional<std::uint64_t> seed;
        std::string out = "secbeam_out";
        std::optional<double> target_secrecy;
        std::optional<double> power_cap_db;
        std::size_t threads = 0;
    };

    void add_common(CLI::App &cmd, CommonOptions &o)
    {
        cmd.add_option("--config", o.config_path, "Scenario file (key = value lines)");
        cmd.add_option("--band", o.band, "Frequency band")->check(CLI::IsMember({"sub6", "mmwave"}));
        cmd.add_option("--filter", o.filter, "Digital precoder")->check(CLI::IsMember({"zf", "mmse", "mrt", "all"}));
        cmd.add_option("--snr", o.snr, "SNR sweep A:B:STEP in dB");
        cmd.add_option("--users", o.users, "User-count sweep A:B");
        cmd.add_option("--trials", o.trials, "Monte Carlo trials per axis point");
        cmd.add_option("--seed", o.seed, "Master seed");
        cmd.add_option("--out", o.out, "Output directory");
        cmd.add_option("--target-secrecy", o.target_secrecy, "Power adaptation target in bits/s/Hz");
        cmd.add_option("--power-cap", o.power_cap_db, "Power adaptation cap in dB");
        cmd.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    }

    std::string num(double x)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }

    std::string utc_timestamp()
    {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::size_t resolve_threads(std::size_t requested)
    {
        if (requested > 0)
            return requested;
        return std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }

    // Maps the flags onto config keys so that file and flag values share one
    // validation path.
    RunManifest build_manifest(const std::string &command, const CommonOptions &o)
    {
        ConfigOverrides ov;
        if (o.band)
            ov["band"] = *o.band;
        if (o.trials)
            ov["trials"] = std::to_string(*o.trials);
        if (o.seed)
            ov["seed"] = std::to_string(*o.seed);
        if (o.target_secrecy)
            ov["power_adapt.target_secrecy"] = num(*o.target_secrecy);
        if (o.power_cap_db)
            ov["power_adapt.power_cap_db"] = num(*o.power_cap_db);
        if (o.filter && *o.filter != "all")
            ov["filter"] = *o.filter;

        if (command == "sweep-snr")
            ov["sweep"] = "snr:" + o.snr.value_or("-10:10:1");
        else if (command == "sweep-users")
            ov["sweep"] = "users:" + o.users.value_or("1:10");
        else if (command == "power-adapt")
        {
            ov["power_adapt"] = "on";
            if (o.snr)
                ov["sweep"] = "snr:" + *o.snr;
            else if (o.users)
                ov["sweep"] = "users:" + *o.users;
        }
        else if (command == "single")
        {
            if (o.snr || o.users)
                throw ConfigError("single: --snr and --users are not accepted, use a sweep command");
            ov["sweep"] = "none";
        }

        RunManifest m;
        m.command = command;
        m.config_path = o.config_path;
        m.config = o.config_path.empty() ? parse_config("", ov) : parse_config_file(o.config_path, ov);
        m.output_dir = o.out;
        m.timestamp = utc_timestamp();
        m.tool_version = SECBEAM_VERSION;

        const bool sweep = command == "sweep-snr" || command == "sweep-users";
        const std::string filter = o.filter.value_or(sweep ? "all" : to_string(m.config.filter));
        if (filter == "all")
            m.filters = {Filter::zf, Filter::mmse, Filter::mrt};
        else
            m.filters = {filter_from_string(filter)};
        m.include_su = true;
        return m;
    }

    int execute(const RunManifest &m, std::size_t threads)
    {
        std::cerr << "secbeam " << m.command << ": " << m.config.axis_points() << " axis point(s) x "
                  << m.config.trials << " trials, " << threads << " thread(s)\n";

        const auto curves = run_campaigns(m.config, m.filters, m.include_su, RunOptions{threads});
        const auto written = emit_csv(curves, m.output_dir);
        const auto manifest_path = std::filesystem::path(m.output_dir) / "manifest.cfg";
        write_text(manifest_path, format_manifest(m));

        bool failed = false;
        for (const auto &c : curves)
        {
            failed = failed || c.failed();
            std::size_t failures = 0;
            for (const auto &p : c.points)
                failures += p.failures;
            std::printf("%-5s points=%zu failures=%zu%s\n", c.label.c_str(), c.points.size(), failures,
                        c.failed() ? "  [over 1%]" : "");
        }
        for (const auto &p : written)
            std::printf("wrote %s\n", p.string().c_str());
        std::printf("wrote %s\n", manifest_path.string().c_str());

        if (failed)
        {
            std::cerr << "secbeam: campaign failed, more than 1% of trials failed at some point\n";
            return exit_campaign_failed;
        }
        return exit_ok;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"secbeam: secrecy-rate hybrid beamforming simulator"};
    app.set_version_flag("--version", std::string(SECBEAM_VERSION));
    app.require_subcommand(1);

    CommonOptions opts;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"sweep-snr", "Secrecy and efficiency versus SNR"},
        {"sweep-users", "Secrecy and efficiency versus number of users"},
        {"power-adapt", "Variable-power runs that raise P_b until the target is met"},
        {"single", "One axis point at the configured P_b"},
    };
    for (const auto &[name, help] : commands)
        add_common(*app.add_subcommand(name, help), opts);

    std::string manifest_path;
    std::optional<std::string> replay_out;
    std::size_t replay_threads = 0;
    auto *replay = app.add_subcommand("replay", "Re-run a campaign from its manifest");
    replay->add_option("--manifest", manifest_path, "Manifest written by an earlier run")->required();
    replay->add_option("--out", replay_out, "Output directory (default: the manifest's)");
    replay->add_option("--threads", replay_threads, "Worker threads (0 = all cores)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try
    {
        if (replay->parsed())
        {
            if (!std::filesystem::is_regular_file(manifest_path))
                throw ConfigError("manifest '" + manifest_path + "' does not exist");
            RunManifest m = parse_manifest(read_text(manifest_path));
            if (replay_out)
                m.output_dir = *replay_out;
            return execute(m, resolve_threads(replay_threads));
        }
        const std::string command = app.get_subcommands().front()->get_name();
        return execute(build_manifest(command, opts), resolve_threads(opts.threads));
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "secbeam: " << e.what() << "\n";
        return exit_invalid;
    }
    catch (const std::exception &e)
    {
        std::cerr << "secbeam: " << e.what() << "\n";
        return exit_campaign_failed;
    }
}
