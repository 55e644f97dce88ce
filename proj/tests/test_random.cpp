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

#include "zic/random.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace zic;

TEST_CASE("Philox4x32-10 known-answer vectors", "[random]")
{
    using C = Philox4x32::Counter;
    CHECK(Philox4x32(Philox4x32::Key{0, 0})(C{0, 0, 0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32(Philox4x32::Key{0xffffffff, 0xffffffff})(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32(Philox4x32::Key{0xa4093822, 0x299f31d0})(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("Seeded streams are pure functions of their position", "[random]")
{
    const Philox4x32 a(7), b(7), c(8);
    CHECK(a.uniform_pair(123, 2) == b.uniform_pair(123, 2));
    CHECK(a.uniform_pair(123, 2) != c.uniform_pair(123, 2));
    CHECK(a.uniform_pair(123, 2) != a.uniform_pair(124, 2));
    CHECK(a.uniform_pair(123, 2) != a.uniform_pair(123, 3));
}

TEST_CASE("Uniform and normal moments", "[random]")
{
    const Philox4x32 rng(99);
    constexpr int n = 200000;
    double su = 0, su2 = 0, sn = 0, sn2 = 0, sn4 = 0, cross = 0;
    for (int i = 0; i < n; ++i) {
        const auto u = rng.uniform_pair(i, 0);
        CHECK((u[0] > 0.0 && u[0] < 1.0 && u[1] > 0.0 && u[1] < 1.0));
        su += u[0];
        su2 += u[0] * u[0];
        const auto g = rng.normal_pair(i, 1);
        sn += g[0];
        sn2 += g[0] * g[0];
        sn4 += g[0] * g[0] * g[0] * g[0];
        cross += g[0] * g[1];
    }
    CHECK(std::abs(su / n - 0.5) < 0.005);
    CHECK(std::abs(su2 / n - 1.0 / 3.0) < 0.005);
    CHECK(std::abs(sn / n) < 0.01);
    CHECK(std::abs(sn2 / n - 1.0) < 0.01);
    CHECK(std::abs(sn4 / n - 3.0) < 0.06);
    CHECK(std::abs(cross / n) < 0.01);
}
