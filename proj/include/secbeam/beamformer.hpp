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


#ifndef SECBEAM_BEAMFORMER_HPP
#define SECBEAM_BEAMFORMER_HPP

#include "secbeam/channel.hpp"
#include "secbeam/linalg.hpp"

#include <vector>

namespace secbeam
{
    // Analog beamformers of one system snapshot. The optimizer only moves
    // w_user and f_rf; the eavesdropper combiners and the jammer precoder are
    // outside the operator's control and stay fixed.
    struct BeamformerState
    {
        std::vector<ComplexVector> w_user; // U combiners, N_r each
        std::vector<ComplexVector> f_rf;   // U analog precoder columns, N_t each
        std::vector<ComplexVector> w_eve;  // M combiners, N_E each
        ComplexVector f_jam = ComplexVector(std::size_t{1});

        std::size_t users() const noexcept { return w_user.size(); }

        // N_t x U matrix [f_rf[0] ... f_rf[U-1]].
        ComplexMatrix f_rf_matrix() const;

        // Throws DimensionError unless every vector matches `channels`.
        void validate_against(const ChannelSet &channels) const;

        bool operator==(const BeamformerState &) const = default;
    };

} // namespace secbeam

#endif
