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
#include "secbeam/channel.hpp"
#include "secbeam/config_io.hpp"
#include "secbeam/digital_precoding.hpp"
#include "secbeam/metrics.hpp"
#include "secbeam/montecarlo.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace secbeam;

namespace
{
    using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

    ComplexVector to_vector(const CArray &a)
    {
        if (a.ndim() != 1)
            throw DimensionError("expected a 1-d array, got " + std::to_string(a.ndim()) + " dimensions");
        return ComplexVector(std::vector<Complex>(a.data(), a.data() + a.size()));
    }

    ComplexMatrix to_matrix(const CArray &a)
    {
        if (a.ndim() != 2)
            throw DimensionError("expected a 2-d array, got " + std::to_string(a.ndim()) + " dimensions");
        return ComplexMatrix(a.shape(0), a.shape(1), std::vector<Complex>(a.data(), a.data() + a.size()));
    }

    CArray from_vector(const ComplexVector &v)
    {
        CArray out(static_cast<py::ssize_t>(v.size()));
        std::copy(v.begin(), v.end(), out.mutable_data());
        return out;
    }

    CArray from_matrix(const ComplexMatrix &m)
    {
        CArray out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
        std::copy(m.row_major().begin(), m.row_major().end(), out.mutable_data());
        return out;
    }

    py::dict curve_to_dict(const CampaignResult &c)
    {
        std::vector<double> axis, secrecy, efficiency, cycles, final_pb;
        std::vector<std::size_t> trials, failures;
        for (const auto &p : c.points)
        {
            axis.push_back(p.axis);
            secrecy.push_back(p.mean_secrecy);
            efficiency.push_back(p.mean_efficiency);
            trials.push_back(p.trials);
            failures.push_back(p.failures);
            cycles.push_back(p.mean_cycles);
            final_pb.push_back(p.mean_final_pb_db);
        }
        py::dict d;
        d["axis"] = axis;
        d["mean_secrecy"] = secrecy;
        d["mean_efficiency"] = efficiency;
        d["trials"] = trials;
        d["failures"] = failures;
        d["failed"] = c.failed();
        d["csv"] = format_csv(c);
        if (c.variable_power)
        {
            d["mean_cycles"] = cycles;
            d["mean_final_pb_db"] = final_pb;
        }
        return d;
    }
} // namespace

PYBIND11_MODULE(_secbeam, m)
{
    m.doc() = "Secrecy-rate hybrid beamforming simulator";
#ifdef SECBEAM_VERSION
    m.attr("__version__") = py::str(SECBEAM_VERSION);
#else
    m.attr("__version__") = py::str("unknown");
#endif

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<PrecoderError>(m, "PrecoderError", PyExc_ArithmeticError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

    m.def(
        "steering_vector",
        [](const std::string &kind, std::size_t count, double azimuth, double elevation, double spacing) {
            const auto geometry = ArrayGeometry::of_kind(array_kind_from_string(kind), count, spacing);
            return from_vector(steering_vector(geometry, azimuth, elevation));
        },
        py::arg("kind"), py::arg("count"), py::arg("azimuth"), py::arg("elevation") = 0.0, py::arg("spacing") = 0.5,
        "Unit-norm array response of a ULA ('ula') or UPA ('upa').");

    m.def(
        "generate_channel",
        [](std::size_t n_rx, std::size_t n_tx, std::size_t n_clusters, std::size_t n_rays, double spread_deg,
           const std::string &array, double spacing, std::uint64_t seed) {
            LinkModel model{n_clusters, n_rays, spread_deg, array_kind_from_string(array), spacing};
            RandomStream rng(seed);
            return from_matrix(generate_channel(model.link(n_rx, n_tx), rng));
        },
        py::arg("n_rx"), py::arg("n_tx"), py::arg("n_clusters") = 4, py::arg("n_rays") = 15,
        py::arg("angular_spread_deg") = 10.0, py::arg("array") = "ula", py::arg("spacing") = 0.5,
        py::arg("seed") = 1, "Clustered geometric channel, n_rx x n_tx.");

    m.def("project", [](const CArray &v) { return from_vector(project(to_vector(v))); }, py::arg("v"),
          "Constant-modulus unit-norm projection.");

    m.def("db_to_linear", &db_to_linear, py::arg("x_db"));
    m.def("linear_to_db", &linear_to_db, py::arg("x"));
    m.def("rate", &rate, py::arg("sinr"), "log2(1 + sinr)");
    m.def(
        "secrecy", [](double c_u, const std::vector<double> &c_e) { return secrecy(c_u, c_e); }, py::arg("c_u"),
        py::arg("c_e"), "max(c_u - max(c_e), 0)");

    m.def(
        "energy_efficiency",
        [](double c_u, double p_b_db, std::size_t n_t, std::size_t n_rf, const std::string &connectivity,
           double p_rf_mw, double p_pa_mw, double p_ps_mw) {
            PowerConfig power;
            power.p_b_db = p_b_db;
            EnergyModel model{p_rf_mw, p_pa_mw, p_ps_mw, n_rf, connectivity_from_string(connectivity)};
            return energy_efficiency(c_u, power, model, n_t);
        },
        py::arg("c_u"), py::arg("p_b_db"), py::arg("n_t"), py::arg("n_rf") = 5, py::arg("connectivity") = "fully",
        py::arg("p_rf_mw") = 100.0, py::arg("p_pa_mw") = 100.0, py::arg("p_ps_mw") = 10.0,
        "Secrecy rate per consumed mW.");

    m.def(
        "precode",
        [](const std::string &filter, const CArray &h, double snr_linear) {
            return from_matrix(precode(filter_from_string(filter), EffectiveChannel{to_matrix(h)}, snr_linear));
        },
        py::arg("filter"), py::arg("h"), py::arg("snr_linear") = 1.0,
        "Baseband precoder ('zf', 'mmse' or 'mrt') for a U x U effective channel.");

    m.def(
        "normalize_columns",
        [](const CArray &f_bb, const CArray &f_rf) {
            return from_matrix(normalize_columns(to_matrix(f_bb), to_matrix(f_rf)));
        },
        py::arg("f_bb"), py::arg("f_rf"));

    m.def(
        "parse_config",
        [](const std::string &text, const ConfigOverrides &overrides) {
            return emit_config(parse_config(text, overrides));
        },
        py::arg("text") = "", py::arg("overrides") = ConfigOverrides{},
        "Validate a scenario and return it with every key resolved.");

    m.def(
        "run_campaign",
        [](const std::string &text, const std::vector<std::string> &filters, bool include_su, std::size_t threads) {
            const ScenarioConfig cfg = parse_config(text);
            std::vector<Filter> fs;
            for (const auto &f : filters)
                fs.push_back(filter_from_string(f));
            std::vector<CampaignResult> curves;
            {
                py::gil_scoped_release release;
                curves = run_campaigns(cfg, fs, include_su, RunOptions{threads});
            }
            py::dict out;
            for (const auto &c : curves)
                out[py::str(c.label)] = curve_to_dict(c);
            return out;
        },
        py::arg("config"), py::arg("filters") = std::vector<std::string>{"mmse"}, py::arg("include_su") = true,
        py::arg("threads") = 1, "Run a Monte Carlo campaign; returns {label: curve}.");
}
