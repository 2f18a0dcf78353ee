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


#ifndef SECBEAM_CHANNEL_HPP
#define SECBEAM_CHANNEL_HPP

#include "secbeam/linalg.hpp"
#include "secbeam/random.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace secbeam
{
    enum class ArrayKind
    {
        uniform_linear,
        uniform_planar
    };

    std::string to_string(ArrayKind kind);
    ArrayKind array_kind_from_string(const std::string &name);

    // Antenna array layout. A linear array responds to azimuth only; a planar
    // array is horizontal x vertical elements with the vertical index fastest.
    struct ArrayGeometry
    {
        ArrayKind kind = ArrayKind::uniform_linear;
        std::size_t count = 1;
        std::size_t horizontal = 1;
        std::size_t vertical = 1;
        double spacing = 0.5; // wavelengths

        static ArrayGeometry linear(std::size_t count, double spacing = 0.5);
        static ArrayGeometry planar(std::size_t horizontal, std::size_t vertical, double spacing = 0.5);

        // Most-square planar factorization of `count` (vertical <= horizontal).
        static ArrayGeometry planar_for(std::size_t count, double spacing = 0.5);

        // Layout of the requested kind with `count` elements.
        static ArrayGeometry of_kind(ArrayKind kind, std::size_t count, double spacing = 0.5);

        void validate() const;

        bool operator==(const ArrayGeometry &) const = default;
    };

    struct ChannelParams
    {
        std::size_t n_clusters = 4;
        std::size_t n_rays = 15;
        double angular_spread_deg = 10.0;
        ArrayGeometry tx_geometry;
        ArrayGeometry rx_geometry;

        void validate() const;
    };

    // One propagation path: complex gain plus arrival and departure angles (radians).
    struct ChannelRay
    {
        Complex beta;
        double aoa_azimuth = 0.0;
        double aoa_elevation = 0.0;
        double aod_azimuth = 0.0;
        double aod_elevation = 0.0;
    };

    // Unit-norm array response toward (azimuth, elevation).
    ComplexVector steering_vector(const ArrayGeometry &geometry, double azimuth_rad, double elevation_rad);

    // Draws the n_clusters * n_rays paths of one clustered channel: cluster
    // centers uniform over azimuth [0, 2pi) and elevation [-pi/2, pi/2],
    // Laplacian per-ray offsets whose standard deviation is the angular
    // spread, unit-variance complex Gaussian gains.
    std::vector<ChannelRay> draw_rays(const ChannelParams &params, RandomStream &rng);

    // H = sqrt(N_R N_T / (N_cl N_ray)) * sum beta a_R(aoa) a_T(aod)^H
    ComplexMatrix synthesize_channel(const ChannelParams &params, const std::vector<ChannelRay> &rays);

    ComplexMatrix generate_channel(const ChannelParams &params, RandomStream &rng);

    // Propagation law shared by every link of a scenario; per-link array
    // sizes come from the antenna counts.
    struct LinkModel
    {
        std::size_t n_clusters = 4;
        std::size_t n_rays = 15;
        double angular_spread_deg = 10.0;
        ArrayKind array = ArrayKind::uniform_linear;
        double spacing = 0.5;

        ChannelParams link(std::size_t n_rx, std::size_t n_tx) const;

        bool operator==(const LinkModel &) const = default;
    };

    struct ChannelSetShape
    {
        std::size_t n_t = 64; // BS antennas
        std::size_t n_r = 4;  // antennas per legitimate user
        std::size_t n_e = 4;  // antennas per eavesdropper
        std::size_t n_j = 4;  // jammer antennas
        std::size_t users = 5;
        std::size_t eves = 1;
        LinkModel model;

        void validate() const;
    };

    // One realization of every link in the system.
    struct ChannelSet
    {
        std::vector<ComplexMatrix> bs_to_user;     // U of N_r x N_t
        std::vector<ComplexMatrix> bs_to_eve;      // M of N_E x N_t
        std::vector<ComplexMatrix> jammer_to_user; // U of N_r x N_j

        std::size_t users() const noexcept { return bs_to_user.size(); }
        std::size_t eves() const noexcept { return bs_to_eve.size(); }
        std::size_t n_t() const { return bs_to_user.at(0).cols(); }
        std::size_t n_r() const { return bs_to_user.at(0).rows(); }
        std::size_t n_j() const { return jammer_to_user.at(0).cols(); }

        // Throws DimensionError when the matrices do not describe one system.
        void validate() const;
    };

    // Draw order: all H_u, then all H_E, then all H_{j,u}.
    ChannelSet generate_channel_set(const ChannelSetShape &shape, RandomStream &rng);

} // namespace secbeam

#endif
