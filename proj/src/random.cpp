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


#include "secbeam/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace secbeam
{
    std::uint64_t mix64(std::uint64_t x) noexcept
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    RandomStream::RandomStream(std::uint64_t seed) : key_(seed), engine_(mix64(seed)) {}

    RandomStream RandomStream::child(std::initializer_list<std::uint64_t> path) const
    {
        std::uint64_t k = mix64(key_ ^ 0x5851f42d4c957f2dULL);
        for (auto p : path)
            k = mix64(k ^ mix64(p + 0x2545f4914f6cdd1dULL));
        return RandomStream(k);
    }

    double RandomStream::uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double RandomStream::uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    double RandomStream::normal()
    {
        if (spare_normal_)
        {
            const double z = *spare_normal_;
            spare_normal_.reset();
            return z;
        }
        const Complex pair = complex_normal() * std::numbers::sqrt2;
        spare_normal_ = pair.imag();
        return pair.real();
    }

    Complex RandomStream::complex_normal()
    {
        // 1 - u keeps the log argument in (0, 1].
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-std::log(u1)); // sqrt(-2 ln u)/sqrt(2)
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double RandomStream::laplace(double scale)
    {
        const double u = uniform() - 0.5;
        const double sign = u < 0.0 ? -1.0 : 1.0;
        return -scale * sign * std::log(std::max(1.0 - 2.0 * std::abs(u), 0x1.0p-53));
    }

    ComplexVector RandomStream::complex_normal_vector(std::size_t n)
    {
        ComplexVector v(n);
        for (auto &z : v)
            z = complex_normal();
        return v;
    }

} // namespace secbeam
