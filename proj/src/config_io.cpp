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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace secbeam
{
    namespace
    {
        struct Entry
        {
            std::string key;
            std::string value;
            std::size_t line = 0;
        };

        std::string trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return std::string(s.substr(first, last - first + 1));
        }

        std::vector<Entry> parse_lines(std::string_view text)
        {
            std::vector<Entry> entries;
            std::size_t line_no = 0;
            std::size_t pos = 0;
            while (pos <= text.size())
            {
                const std::size_t end = std::min(text.find('\n', pos), text.size());
                std::string_view line = text.substr(pos, end - pos);
                pos = end + 1;
                ++line_no;

                if (const auto hash = line.find('#'); hash != std::string_view::npos)
                    line = line.substr(0, hash);
                const std::string content = trim(line);
                if (content.empty())
                {
                    if (end == text.size())
                        break;
                    continue;
                }
                const auto eq = content.find('=');
                if (eq == std::string::npos)
                    throw ConfigError("line " + std::to_string(line_no) + ": expected key = value, got '" + content + "'");
                Entry e{trim(content.substr(0, eq)), trim(content.substr(eq + 1)), line_no};
                if (e.key.empty())
                    throw ConfigError("line " + std::to_string(line_no) + ": missing key before '='");
                entries.push_back(std::move(e));
                if (end == text.size())
                    break;
            }
            return entries;
        }

        std::string fmt17(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }

        std::string fmt9(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.9g", x);
            return buf;
        }

        double to_double(const std::string &key, const std::string &value)
        {
            double v = 0.0;
            const char *first = value.data();
            const char *last = first + value.size();
            if (!value.empty() && *first == '+')
                ++first;
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last || std::isnan(v))
                throw ConfigError(key + ": expected a number, got '" + value + "'");
            return v;
        }

        std::uint64_t to_u64(const std::string &key, const std::string &value)
        {
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
                throw ConfigError(key + ": expected a non-negative integer, got '" + value + "'");
            return v;
        }

        std::size_t to_count(const std::string &key, const std::string &value)
        {
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || ptr != value.data() + value.size() || value.empty() || v == 0)
                throw ConfigError(key + ": expected a positive integer, got '" + value + "'");
            return static_cast<std::size_t>(v);
        }

        bool to_switch(const std::string &key, const std::string &value)
        {
            if (value == "on" || value == "true")
                return true;
            if (value == "off" || value == "false")
                return false;
            throw ConfigError(key + ": expected on or off, got '" + value + "'");
        }

        template <typename Fn>
        auto wrap(const std::string &key, Fn &&fn)
        {
            try
            {
                return fn();
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(key + ": " + e.what());
            }
        }

        using Setter = std::function<void(ScenarioConfig &, PowerAdaptConfig &, const std::string &)>;

        struct KeySpec
        {
            std::string key;
            Setter set;
            std::function<std::string(const ScenarioConfig &)> get;
        };

        const std::vector<KeySpec> &key_specs()
        {
            static const std::vector<KeySpec> specs = [] {
                std::vector<KeySpec> s;
                const auto count = [&s](std::string key, std::size_t ScenarioConfig::*field) {
                    s.push_back({key,
                                 [key, field](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                     c.*field = to_count(key, v);
                                 },
                                 [field](const ScenarioConfig &c) { return std::to_string(c.*field); }});
                };
                const auto real = [&s](std::string key, auto accessor) {
                    s.push_back({key,
                                 [key, accessor](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                     accessor(c) = to_double(key, v);
                                 },
                                 [accessor](const ScenarioConfig &c) {
                                     return fmt17(accessor(const_cast<ScenarioConfig &>(c)));
                                 }});
                };
                const auto adapt_real = [&s](std::string key, double PowerAdaptConfig::*field) {
                    s.push_back({key,
                                 [key, field](ScenarioConfig &, PowerAdaptConfig &p, const std::string &v) {
                                     p.*field = to_double(key, v);
                                 },
                                 [field](const ScenarioConfig &c) { return fmt17((*c.power_adapt).*field); }});
                };

                s.push_back({"band", [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.band = wrap("band", [&] { return band_from_string(v); });
                             },
                             [](const ScenarioConfig &c) { return to_string(c.band); }});
                count("n_t", &ScenarioConfig::n_t);
                count("n_r", &ScenarioConfig::n_r);
                count("n_e", &ScenarioConfig::n_e);
                count("n_j", &ScenarioConfig::n_j);
                count("users", &ScenarioConfig::users);
                count("eves", &ScenarioConfig::eves);
                s.push_back({"channel.n_clusters",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.channel.n_clusters = to_count("channel.n_clusters", v);
                             },
                             [](const ScenarioConfig &c) { return std::to_string(c.channel.n_clusters); }});
                s.push_back({"channel.n_rays",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.channel.n_rays = to_count("channel.n_rays", v);
                             },
                             [](const ScenarioConfig &c) { return std::to_string(c.channel.n_rays); }});
                real("channel.angular_spread_deg", [](ScenarioConfig &c) -> double & { return c.channel.angular_spread_deg; });
                s.push_back({"channel.array",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.channel.array = wrap("channel.array", [&] { return array_kind_from_string(v); });
                             },
                             [](const ScenarioConfig &c) { return to_string(c.channel.array); }});
                real("channel.spacing", [](ScenarioConfig &c) -> double & { return c.channel.spacing; });
                real("power.p_b_db", [](ScenarioConfig &c) -> double & { return c.power.p_b_db; });
                real("power.p_j_db", [](ScenarioConfig &c) -> double & { return c.power.p_j_db; });
                real("power.noise_var_user", [](ScenarioConfig &c) -> double & { return c.power.noise_var_user; });
                real("power.noise_var_eve", [](ScenarioConfig &c) -> double & { return c.power.noise_var_eve; });
                real("energy.p_rf_mw", [](ScenarioConfig &c) -> double & { return c.energy.p_rf_mw; });
                real("energy.p_pa_mw", [](ScenarioConfig &c) -> double & { return c.energy.p_pa_mw; });
                real("energy.p_ps_mw", [](ScenarioConfig &c) -> double & { return c.energy.p_ps_mw; });
                s.push_back({"energy.n_rf",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.energy.n_rf = v == "auto" ? 0 : to_count("energy.n_rf", v);
                             },
                             [](const ScenarioConfig &c) {
                                 return c.energy.n_rf == 0 ? std::string("auto") : std::to_string(c.energy.n_rf);
                             }});
                s.push_back({"energy.connectivity",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.energy.connectivity = wrap("energy.connectivity", [&] { return connectivity_from_string(v); });
                             },
                             [](const ScenarioConfig &c) { return to_string(c.energy.connectivity); }});
                real("ascent.step_size", [](ScenarioConfig &c) -> double & { return c.ascent.step_size_init; });
                real("ascent.eps", [](ScenarioConfig &c) -> double & { return c.ascent.convergence_eps; });
                s.push_back({"ascent.max_iters",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.ascent.max_iters = to_count("ascent.max_iters", v);
                             },
                             [](const ScenarioConfig &c) { return std::to_string(c.ascent.max_iters); }});
                real("ascent.step_shrink", [](ScenarioConfig &c) -> double & { return c.ascent.step_shrink; });
                // The switch itself is resolved in parse_config.
                s.push_back({"power_adapt", [](ScenarioConfig &, PowerAdaptConfig &, const std::string &) {},
                             [](const ScenarioConfig &c) { return std::string(c.power_adapt ? "on" : "off"); }});
                adapt_real("power_adapt.target_secrecy", &PowerAdaptConfig::target_secrecy);
                adapt_real("power_adapt.power_cap_db", &PowerAdaptConfig::power_cap_db);
                adapt_real("power_adapt.rate", &PowerAdaptConfig::adapt_rate);
                s.push_back({"filter",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.filter = wrap("filter", [&] { return filter_from_string(v); });
                             },
                             [](const ScenarioConfig &c) { return to_string(c.filter); }});
                count("trials", &ScenarioConfig::trials);
                s.push_back({"seed",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.master_seed = to_u64("seed", v);
                             },
                             [](const ScenarioConfig &c) { return std::to_string(c.master_seed); }});
                s.push_back({"sweep",
                             [](ScenarioConfig &c, PowerAdaptConfig &, const std::string &v) {
                                 c.sweep = wrap("sweep", [&] { return SweepAxis::parse(v); });
                             },
                             [](const ScenarioConfig &c) { return c.sweep.to_string(); }});
                return s;
            }();
            return specs;
        }

        bool is_adapt_subkey(const std::string &key)
        {
            return key.rfind("power_adapt.", 0) == 0;
        }
    } // namespace

    const std::vector<std::string> &config_keys()
    {
        static const std::vector<std::string> keys = [] {
            std::vector<std::string> k;
            for (const auto &entry : key_specs())
                k.push_back(entry.key);
            return k;
        }();
        return keys;
    }

    ScenarioConfig parse_config(std::string_view text, const ConfigOverrides &overrides)
    {
        std::map<std::string, std::string> values;
        for (const auto &e : parse_lines(text))
        {
            if (values.count(e.key))
                throw ConfigError("line " + std::to_string(e.line) + ": duplicate key '" + e.key + "'");
            values[e.key] = e.value;
        }
        for (const auto &[k, v] : overrides)
            values[k] = v;

        const auto &known = config_keys();
        for (const auto &[k, v] : values)
            if (std::find(known.begin(), known.end(), k) == known.end())
                throw ConfigError("unknown key '" + k + "'");

        Band band = Band::mmwave;
        if (auto it = values.find("band"); it != values.end())
            band = wrap("band", [&] { return band_from_string(it->second); });
        ScenarioConfig cfg = ScenarioConfig::defaults(band);

        bool adapt = false;
        for (const auto &[k, v] : values)
            adapt = adapt || is_adapt_subkey(k);
        if (auto it = values.find("power_adapt"); it != values.end())
            adapt = to_switch("power_adapt", it->second);

        PowerAdaptConfig pending;
        for (const auto &entry : key_specs())
            if (auto it = values.find(entry.key); it != values.end())
                entry.set(cfg, pending, it->second);
        if (adapt)
            cfg.power_adapt = pending;

        wrap("config", [&] {
            cfg.validate();
            return 0;
        });
        return cfg;
    }

    ScenarioConfig parse_config_file(const std::filesystem::path &path, const ConfigOverrides &overrides)
    {
        if (!std::filesystem::exists(path))
            throw ConfigError("config file '" + path.string() + "' does not exist");
        return parse_config(read_text(path), overrides);
    }

    std::string emit_config(const ScenarioConfig &config)
    {
        std::string out;
        for (const auto &entry : key_specs())
        {
            if (is_adapt_subkey(entry.key) && !config.power_adapt)
                continue;
            out += entry.key + " = " + entry.get(config) + "\n";
        }
        return out;
    }

    std::string format_csv(const CampaignResult &result)
    {
        std::string out = "axis,mean_secrecy_bps_hz,mean_ee_bits_hz_mw,trials,failures";
        if (result.variable_power)
            out += ",cycles,final_pb_db";
        out += "\n";
        for (const auto &p : result.points)
        {
            out += fmt9(p.axis) + "," + fmt9(p.mean_secrecy) + "," + fmt9(p.mean_efficiency) + "," +
                   std::to_string(p.trials) + "," + std::to_string(p.failures);
            if (result.variable_power)
                out += "," + fmt9(p.mean_cycles) + "," + fmt9(p.mean_final_pb_db);
            out += "\n";
        }
        return out;
    }

    std::string plot_script(const std::vector<CampaignResult> &curves)
    {
        std::string xlabel = "P_b (dB)";
        if (!curves.empty())
        {
            if (curves.front().config.sweep.kind == SweepAxis::Kind::snr)
                xlabel = "SNR (dB)";
            else if (curves.front().config.sweep.kind == SweepAxis::Kind::users)
                xlabel = "Number of users";
        }

        const auto plot_line = [&curves](int column) {
            std::string line = "plot";
            for (std::size_t k = 0; k < curves.size(); ++k)
            {
                line += (k == 0 ? " " : ", \\\n     ");
                line += "'" + curves[k].label + ".csv' using 1:" + std::to_string(column) +
                        " with linespoints title '" + curves[k].label + "'";
            }
            return line + "\n";
        };

        std::string s;
        s += "# gnuplot -p plot.gp\n";
        s += "set datafile separator ','\n";
        s += "set key autotitle columnheader\n";
        s += "set grid\n";
        s += "set terminal pngcairo size 900,600\n";
        s += "set xlabel '" + xlabel + "'\n\n";
        s += "set output 'secrecy.png'\n";
        s += "set ylabel 'Average secrecy (bits/s/Hz)'\n";
        s += plot_line(2);
        s += "\nset output 'efficiency.png'\n";
        s += "set ylabel 'Energy efficiency (bits/s/Hz/mW)'\n";
        s += plot_line(3);
        if (!curves.empty() && curves.front().variable_power)
        {
            s += "\nset output 'power.png'\n";
            s += "set ylabel 'Final P_b (dB)'\n";
            s += plot_line(7);
        }
        return s;
    }

    std::vector<std::filesystem::path> emit_csv(const std::vector<CampaignResult> &curves,
                                                const std::filesystem::path &dir)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec || !std::filesystem::is_directory(dir))
            throw std::runtime_error("cannot create output directory '" + dir.string() + "'");

        std::vector<std::filesystem::path> written;
        for (const auto &c : curves)
        {
            const auto path = dir / (c.label + ".csv");
            write_text(path, format_csv(c));
            written.push_back(path);
        }
        const auto plot = dir / "plot.gp";
        write_text(plot, plot_script(curves));
        written.push_back(plot);
        return written;
    }

    std::string format_manifest(const RunManifest &m)
    {
        std::string filters;
        for (std::size_t k = 0; k < m.filters.size(); ++k)
            filters += (k ? "," : "") + to_string(m.filters[k]);

        std::string out = "# secbeam run manifest\n";
        out += "manifest.command = " + m.command + "\n";
        out += "manifest.config_path = " + m.config_path + "\n";
        out += "manifest.filters = " + filters + "\n";
        out += std::string("manifest.include_su = ") + (m.include_su ? "on" : "off") + "\n";
        out += "manifest.output_dir = " + m.output_dir + "\n";
        out += "manifest.timestamp = " + m.timestamp + "\n";
        out += "manifest.tool_version = " + m.tool_version + "\n";
        out += "manifest.master_seed = " + std::to_string(m.config.master_seed) + "\n";
        out += emit_config(m.config);
        return out;
    }

    RunManifest parse_manifest(std::string_view text)
    {
        RunManifest m;
        std::string config_text;
        for (const auto &e : parse_lines(text))
        {
            if (e.key.rfind("manifest.", 0) != 0)
            {
                config_text += e.key + " = " + e.value + "\n";
                continue;
            }
            const std::string field = e.key.substr(9);
            if (field == "command")
                m.command = e.value;
            else if (field == "config_path")
                m.config_path = e.value;
            else if (field == "filters")
            {
                std::stringstream ss(e.value);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!trim(item).empty())
                        m.filters.push_back(wrap(e.key, [&] { return filter_from_string(trim(item)); }));
            }
            else if (field == "include_su")
                m.include_su = to_switch(e.key, e.value);
            else if (field == "output_dir")
                m.output_dir = e.value;
            else if (field == "timestamp")
                m.timestamp = e.value;
            else if (field == "tool_version")
                m.tool_version = e.value;
            else if (field == "master_seed")
                continue; // echoed from the config section
            else
                throw ConfigError("unknown manifest key '" + e.key + "'");
        }
        if (m.command.empty())
            throw ConfigError("manifest: missing manifest.command");
        m.config = parse_config(config_text);
        return m;
    }

    void write_text(const std::filesystem::path &path, const std::string &text)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        out << text;
        if (!out)
            throw std::runtime_error("write to '" + path.string() + "' failed");
    }

    std::string read_text(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot read '" + path.string() + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

} // namespace secbeam
