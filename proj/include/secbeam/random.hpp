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


#ifndef SECBEAM_RANDOM_HPP
#define SECBEAM_RANDOM_HPP

#include "secbeam/linalg.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>

namespace secbeam
{
    // Deterministic pseudo-random source. Bits are fully specified: the engine
    // is std::mt19937_64 and every variate is derived from its raw output here,
    // not through the implementation-defined std:: distributions.
    //
    // Child streams are keyed by a path of integers hashed together with the
    // parent key, so stream (seed, a, t) never depends on how many other
    // streams were drawn or in which order.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed);

        std::uint64_t key() const noexcept { return key_; }

        RandomStream child(std::initializer_list<std::uint64_t> path) const;

        // Uniform on [0, 1) with 53 random bits.
        double uniform();
        double uniform(double lo, double hi);

        // Standard normal (Box-Muller).
        double normal();

        // Circularly-symmetric complex Gaussian with E|z|^2 = 1.
        Complex complex_normal();

        // Zero-mean Laplace with the given scale b (variance 2 b^2).
        double laplace(double scale);

        ComplexVector complex_normal_vector(std::size_t n);

    private:
        std::uint64_t key_;
        std::mt19937_64 engine_;
        std::optional<double> spare_normal_;
    };

    // splitmix64 finalizer; exposed for tests of key derivation.
    std::uint64_t mix64(std::uint64_t x) noexcept;

} // namespace secbeam

#endif
