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


#ifndef SECBEAM_CONFIG_IO_HPP
#define SECBEAM_CONFIG_IO_HPP

#include "secbeam/montecarlo.hpp"
#include "secbeam/scenario.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secbeam
{
    // Invalid scenario text or value. what() is one line naming the key.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    using ConfigOverrides = std::map<std::string, std::string>;

    // Scenario files are flat `key = value` lines with dotted section keys;
    // `#` starts a comment. Precedence: overrides, then file values, then
    // the band defaults (band itself defaults to mmwave).
    ScenarioConfig parse_config(std::string_view text, const ConfigOverrides &overrides = {});
    ScenarioConfig parse_config_file(const std::filesystem::path &path, const ConfigOverrides &overrides = {});

    // Every key, fully resolved; parse_config(emit_config(c)) == c.
    std::string emit_config(const ScenarioConfig &config);

    // The keys parse_config accepts, in emit order.
    const std::vector<std::string> &config_keys();

    // Header plus one row per axis point, numbers to 9 significant digits.
    std::string format_csv(const CampaignResult &result);

    // Writes <label>.csv per curve and plot.gp; returns the paths written.
    std::vector<std::filesystem::path> emit_csv(const std::vector<CampaignResult> &curves,
                                                const std::filesystem::path &dir);

    // gnuplot script drawing every curve's mean secrecy and efficiency.
    std::string plot_script(const std::vector<CampaignResult> &curves);

    // Everything needed to reproduce a run's CSV files.
    struct RunManifest
    {
        std::string command; // sweep-snr, sweep-users, power-adapt, single
        std::string config_path;
        std::vector<Filter> filters;
        bool include_su = true;
        ScenarioConfig config;
        std::string output_dir;
        std::string timestamp;
        std::string tool_version;

        std::uint64_t master_seed() const noexcept { return config.master_seed; }
    };

    std::string format_manifest(const RunManifest &manifest);
    RunManifest parse_manifest(std::string_view text);

    void write_text(const std::filesystem::path &path, const std::string &text);
    std::string read_text(const std::filesystem::path &path);

} // namespace secbeam

#endif
