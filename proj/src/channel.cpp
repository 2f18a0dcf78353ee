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


#include "secbeam/channel.hpp"

#include <cmath>
#include <numbers>

namespace secbeam
{
    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;

        // (1/sqrt(n)) exp(i 2pi d k phase), k = 0..n-1
        ComplexVector phase_ramp(std::size_t n, double spacing, double phase)
        {
            ComplexVector v(n);
            const double amp = 1.0 / std::sqrt(static_cast<double>(n));
            for (std::size_t k = 0; k < n; ++k)
                v[k] = std::polar(amp, two_pi * spacing * static_cast<double>(k) * phase);
            return v;
        }
    } // namespace

    std::string to_string(ArrayKind kind)
    {
        return kind == ArrayKind::uniform_linear ? "ula" : "upa";
    }

    ArrayKind array_kind_from_string(const std::string &name)
    {
        if (name == "ula")
            return ArrayKind::uniform_linear;
        if (name == "upa")
            return ArrayKind::uniform_planar;
        throw std::invalid_argument("unknown array kind '" + name + "' (expected ula or upa)");
    }

    ArrayGeometry ArrayGeometry::linear(std::size_t count, double spacing)
    {
        ArrayGeometry g{ArrayKind::uniform_linear, count, count, 1, spacing};
        g.validate();
        return g;
    }

    ArrayGeometry ArrayGeometry::planar(std::size_t horizontal, std::size_t vertical, double spacing)
    {
        ArrayGeometry g{ArrayKind::uniform_planar, horizontal * vertical, horizontal, vertical, spacing};
        g.validate();
        return g;
    }

    ArrayGeometry ArrayGeometry::planar_for(std::size_t count, double spacing)
    {
        if (count == 0)
            throw std::invalid_argument("ArrayGeometry: antenna count must be positive");
        std::size_t vertical = 1;
        for (std::size_t d = 1; d * d <= count; ++d)
            if (count % d == 0)
                vertical = d;
        return planar(count / vertical, vertical, spacing);
    }

    ArrayGeometry ArrayGeometry::of_kind(ArrayKind kind, std::size_t count, double spacing)
    {
        return kind == ArrayKind::uniform_linear ? linear(count, spacing) : planar_for(count, spacing);
    }

    void ArrayGeometry::validate() const
    {
        if (count == 0)
            throw std::invalid_argument("ArrayGeometry: antenna count must be positive");
        if (kind == ArrayKind::uniform_planar && horizontal * vertical != count)
            throw std::invalid_argument("ArrayGeometry: planar factorization " + std::to_string(horizontal) + "x" +
                                        std::to_string(vertical) + " does not match count " + std::to_string(count));
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw std::invalid_argument("ArrayGeometry: element spacing must be positive");
    }

    void ChannelParams::validate() const
    {
        if (n_clusters == 0)
            throw std::invalid_argument("ChannelParams: n_clusters must be at least 1");
        if (n_rays == 0)
            throw std::invalid_argument("ChannelParams: n_rays must be at least 1");
        if (!(angular_spread_deg > 0.0) || !std::isfinite(angular_spread_deg))
            throw std::invalid_argument("ChannelParams: angular_spread_deg must be positive");
        tx_geometry.validate();
        rx_geometry.validate();
    }

    ComplexVector steering_vector(const ArrayGeometry &geometry, double azimuth_rad, double elevation_rad)
    {
        if (geometry.kind == ArrayKind::uniform_linear)
            return phase_ramp(geometry.count, geometry.spacing, std::sin(azimuth_rad));

        const ComplexVector h = phase_ramp(geometry.horizontal, geometry.spacing,
                                           std::sin(azimuth_rad) * std::cos(elevation_rad));
        const ComplexVector v = phase_ramp(geometry.vertical, geometry.spacing, std::sin(elevation_rad));
        ComplexVector a(geometry.count);
        for (std::size_t m = 0; m < geometry.horizontal; ++m)
            for (std::size_t n = 0; n < geometry.vertical; ++n)
                a[m * geometry.vertical + n] = h[m] * v[n];
        return a;
    }

    std::vector<ChannelRay> draw_rays(const ChannelParams &params, RandomStream &rng)
    {
        params.validate();
        // Laplace(b) has standard deviation sqrt(2) b.
        const double scale = params.angular_spread_deg * std::numbers::pi / 180.0 / std::numbers::sqrt2;

        std::vector<ChannelRay> rays;
        rays.reserve(params.n_clusters * params.n_rays);
        for (std::size_t i = 0; i < params.n_clusters; ++i)
        {
            const double aoa_az = rng.uniform(0.0, two_pi);
            const double aoa_el = rng.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
            const double aod_az = rng.uniform(0.0, two_pi);
            const double aod_el = rng.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
            for (std::size_t j = 0; j < params.n_rays; ++j)
            {
                ChannelRay ray;
                ray.beta = rng.complex_normal();
                ray.aoa_azimuth = aoa_az + rng.laplace(scale);
                ray.aoa_elevation = aoa_el + rng.laplace(scale);
                ray.aod_azimuth = aod_az + rng.laplace(scale);
                ray.aod_elevation = aod_el + rng.laplace(scale);
                rays.push_back(ray);
            }
        }
        return rays;
    }

    ComplexMatrix synthesize_channel(const ChannelParams &params, const std::vector<ChannelRay> &rays)
    {
        params.validate();
        if (rays.size() != params.n_clusters * params.n_rays)
            throw DimensionError("synthesize_channel: " + std::to_string(rays.size()) + " rays for " +
                                 std::to_string(params.n_clusters) + " clusters of " + std::to_string(params.n_rays));

        const std::size_t n_rx = params.rx_geometry.count;
        const std::size_t n_tx = params.tx_geometry.count;
        ComplexMatrix h(n_rx, n_tx);
        for (const auto &ray : rays)
        {
            const ComplexVector a_r = steering_vector(params.rx_geometry, ray.aoa_azimuth, ray.aoa_elevation);
            const ComplexVector a_t = steering_vector(params.tx_geometry, ray.aod_azimuth, ray.aod_elevation);
            for (std::size_t i = 0; i < n_rx; ++i)
            {
                const Complex left = ray.beta * a_r[i];
                for (std::size_t j = 0; j < n_tx; ++j)
                    h(i, j) += left * std::conj(a_t[j]);
            }
        }

        const double gain = std::sqrt(static_cast<double>(n_rx * n_tx) /
                                      static_cast<double>(params.n_clusters * params.n_rays));
        for (std::size_t i = 0; i < n_rx; ++i)
            for (std::size_t j = 0; j < n_tx; ++j)
                h(i, j) *= gain;
        return h;
    }

    ComplexMatrix generate_channel(const ChannelParams &params, RandomStream &rng)
    {
        return synthesize_channel(params, draw_rays(params, rng));
    }

    ChannelParams LinkModel::link(std::size_t n_rx, std::size_t n_tx) const
    {
        ChannelParams p;
        p.n_clusters = n_clusters;
        p.n_rays = n_rays;
        p.angular_spread_deg = angular_spread_deg;
        p.rx_geometry = ArrayGeometry::of_kind(array, n_rx, spacing);
        p.tx_geometry = ArrayGeometry::of_kind(array, n_tx, spacing);
        return p;
    }

    void ChannelSetShape::validate() const
    {
        if (n_t == 0 || n_r == 0 || n_e == 0 || n_j == 0)
            throw std::invalid_argument("ChannelSetShape: antenna counts must be positive");
        if (users == 0)
            throw std::invalid_argument("ChannelSetShape: at least one user is required");
        if (eves == 0)
            throw std::invalid_argument("ChannelSetShape: at least one eavesdropper is required");
        model.link(n_r, n_t).validate();
    }

    void ChannelSet::validate() const
    {
        if (bs_to_user.empty())
            throw DimensionError("ChannelSet: no users");
        if (bs_to_eve.empty())
            throw DimensionError("ChannelSet: no eavesdroppers");
        if (jammer_to_user.size() != bs_to_user.size())
            throw DimensionError("ChannelSet: " + std::to_string(jammer_to_user.size()) + " jammer links for " +
                                 std::to_string(bs_to_user.size()) + " users");
        const std::size_t nt = bs_to_user.front().cols();
        const std::size_t nr = bs_to_user.front().rows();
        const std::size_t nj = jammer_to_user.front().cols();
        for (std::size_t u = 0; u < bs_to_user.size(); ++u)
        {
            if (bs_to_user[u].rows() != nr || bs_to_user[u].cols() != nt)
                throw DimensionError("ChannelSet: H_u[" + std::to_string(u) + "] is " + shape_string(bs_to_user[u]));
            if (jammer_to_user[u].rows() != nr || jammer_to_user[u].cols() != nj)
                throw DimensionError("ChannelSet: H_ju[" + std::to_string(u) + "] is " +
                                     shape_string(jammer_to_user[u]));
        }
        const std::size_t ne = bs_to_eve.front().rows();
        for (const auto &he : bs_to_eve)
            if (he.cols() != nt || he.rows() != ne)
                throw DimensionError("ChannelSet: H_E is " + shape_string(he));
    }

    ChannelSet generate_channel_set(const ChannelSetShape &shape, RandomStream &rng)
    {
        shape.validate();
        const ChannelParams user_link = shape.model.link(shape.n_r, shape.n_t);
        const ChannelParams eve_link = shape.model.link(shape.n_e, shape.n_t);
        const ChannelParams jam_link = shape.model.link(shape.n_r, shape.n_j);

        ChannelSet set;
        set.bs_to_user.reserve(shape.users);
        set.bs_to_eve.reserve(shape.eves);
        set.jammer_to_user.reserve(shape.users);
        for (std::size_t u = 0; u < shape.users; ++u)
            set.bs_to_user.push_back(generate_channel(user_link, rng));
        for (std::size_t m = 0; m < shape.eves; ++m)
            set.bs_to_eve.push_back(generate_channel(eve_link, rng));
        for (std::size_t u = 0; u < shape.users; ++u)
            set.jammer_to_user.push_back(generate_channel(jam_link, rng));
        return set;
    }

} // namespace secbeam
