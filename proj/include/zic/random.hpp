// SPDX-License-Identifier: Apache-2.0
//
// zic-pareto: closed-form Pareto boundary of the two-user Z interference
// channel with improper Gaussian signaling
// Copyright (C) 2026 The zic-pareto authors
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

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace zic {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11 "Random123").
/// A 64-bit seed forms the key; every draw is a pure function of
/// (seed, counter), so samples can be generated in any order or partition.
class Philox4x32
{
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit Philox4x32(std::uint64_t seed)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
    {
    }

    explicit Philox4x32(Key key) : key_(key) {}

    [[nodiscard]] Counter operator()(Counter ctr) const
    {
        Key k = key_;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                k[0] += kWeyl0;
                k[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    /// Two uniforms in (0, 1) with 53-bit resolution for stream position
    /// (index, lane).
    [[nodiscard]] std::array<double, 2> uniform_pair(std::uint64_t index, std::uint32_t lane) const
    {
        const auto r = (*this)({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), lane, 0u});
        const std::uint64_t a = (std::uint64_t{r[0]} << 32) | r[1];
        const std::uint64_t b = (std::uint64_t{r[2]} << 32) | r[3];
        return {to_open_unit(a), to_open_unit(b)};
    }

    /// Two independent standard normals (Box-Muller) for (index, lane).
    [[nodiscard]] std::array<double, 2> normal_pair(std::uint64_t index, std::uint32_t lane) const
    {
        const auto [u1, u2] = uniform_pair(index, lane);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static double to_open_unit(std::uint64_t x)
    {
        return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    }

    Key key_;
};

} // namespace zic
