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


#include "secbeam/beamformer.hpp"

#include <string>

namespace secbeam
{
    ComplexMatrix BeamformerState::f_rf_matrix() const
    {
        return ComplexMatrix::from_columns(f_rf);
    }

    void BeamformerState::validate_against(const ChannelSet &channels) const
    {
        channels.validate();
        const auto fail = [](const std::string &what) { throw DimensionError("BeamformerState: " + what); };

        if (w_user.size() != channels.users() || f_rf.size() != channels.users())
            fail(std::to_string(w_user.size()) + " combiners and " + std::to_string(f_rf.size()) +
                 " precoder columns for " + std::to_string(channels.users()) + " users");
        if (w_eve.size() != channels.eves())
            fail(std::to_string(w_eve.size()) + " eavesdropper combiners for " + std::to_string(channels.eves()) +
                 " eavesdroppers");
        for (std::size_t u = 0; u < channels.users(); ++u)
        {
            if (w_user[u].size() != channels.bs_to_user[u].rows())
                fail("w_user[" + std::to_string(u) + "] has length " + std::to_string(w_user[u].size()));
            if (f_rf[u].size() != channels.bs_to_user[u].cols())
                fail("f_rf[" + std::to_string(u) + "] has length " + std::to_string(f_rf[u].size()));
        }
        for (std::size_t m = 0; m < channels.eves(); ++m)
            if (w_eve[m].size() != channels.bs_to_eve[m].rows())
                fail("w_eve[" + std::to_string(m) + "] has length " + std::to_string(w_eve[m].size()));
        if (f_jam.size() != channels.jammer_to_user.front().cols())
            fail("f_jam has length " + std::to_string(f_jam.size()));
    }

} // namespace secbeam
