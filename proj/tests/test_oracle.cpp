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

#include "zic/oracle.hpp"
#include "zic/solver.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using Catch::Approx;
using namespace zic;

namespace {

ZicScenario random_scenario(std::mt19937_64 &gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {0.5 * std::pow(200.0, u(gen)), 0.5 * std::pow(200.0, u(gen)), 0.01 * std::pow(1000.0, u(gen))};
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    return 0.5 * (v[(v.size() - 1) / 2] + v[v.size() / 2]);
}

} // namespace

TEST_CASE("Grid and sampler specs validate their counts", "[oracle]")
{
    CHECK_THROWS_AS((GridSpec{1, 10, 10, 10, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{10, 10, 10, 1, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((McSpec{999, 1, 0}.validate()), std::invalid_argument);
    CHECK((GridSpec{11, 11, 2, 2, 0}.resolution_bound(10.0)) == Approx(10.0 * (1.0 + 0.1)));
}

TEST_CASE("Grid oracle: unconstrained and reference points", "[oracle]")
{
    const ZicScenario s{10, 10, 2};
    const GridSpec g{401, 401, 2, 2, 0};
    const auto free = grid_solve(s, RateTarget::from_alpha(s, 0.0), g);
    CHECK(free.r2_best == Approx(std::log2(11.0)).epsilon(1e-15));
    CHECK(free.p2 == 10.0);
    CHECK(free.kappa2 == 0.0);

    const auto border = grid_solve(s, RateTarget::from_rate(s, 2.196), GridSpec{2001, 2001, 2, 2, 0});
    CHECK(border.r2_best == Approx(0.5 * std::log2(21.0)).margin(1e-3));

    // improper signaling never helps at alpha = 0.7 with a12 = 0.5: no grid
    // point beats the proper closed form, and the grid optimum trails it
    // by at most the power step times the largest slope of R2 in p2
    const ZicScenario sp{10, 10, 0.5};
    const auto rt = RateTarget::from_alpha(sp, 0.7);
    const auto closed = solve_point(sp, rt);
    REQUIRE(closed.kappa2 == 0.0);
    for (const GridSpec gg : {g, GridSpec{2001, 2001, 2, 2, 0}}) {
        const auto proper = grid_solve(sp, rt, gg);
        const double dp = sp.p2_budget / static_cast<double>(gg.p2_points - 1);
        CHECK(proper.r2_best <= closed.r2 + 1e-12);
        CHECK(closed.r2 - proper.r2_best <= dp / std::numbers::ln2);
    }
}

TEST_CASE("Grid oracle is independent of the thread count", "[oracle]")
{
    std::mt19937_64 gen(51);
    for (int i = 0; i < 10; ++i) {
        const auto s = random_scenario(gen);
        const auto rt = RateTarget::from_alpha(s, 0.5);
        const auto one = grid_solve(s, rt, GridSpec{301, 257, 2, 2, 1});
        const auto many = grid_solve(s, rt, GridSpec{301, 257, 2, 2, 7});
        CHECK(one.r2_best == many.r2_best);
        CHECK(one.p2 == many.p2);
        CHECK(one.kappa2 == many.kappa2);
    }
}

TEST_CASE("Closed form matches the grid oracle", "[oracle][solver]")
{
    std::mt19937_64 gen(52);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const GridSpec g{601, 601, 2, 2, 0};
    for (int i = 0; i < 50; ++i) {
        const auto s = random_scenario(gen);
        const auto rt = RateTarget::from_alpha(s, u(gen));
        const auto pt = solve_point(s, rt);
        const auto best = grid_solve(s, rt, g);
        INFO("P1=" << s.p1_budget << " P2=" << s.p2_budget << " a=" << s.a12 << " alpha=" << rt.alpha);
        // every grid point is feasible, so the closed form must dominate
        CHECK(best.r2_best <= pt.r2 + 1e-9);
        CHECK(pt.r2 - best.r2_best <= g.resolution_bound(s.p2_budget));
    }
}

TEST_CASE("User-1 grid: best response and dominance", "[oracle]")
{
    const GridSpec g{2, 2, 501, 360, 0};
    const auto proper = grid_validate_user1({10, 10, 2}, 10, 0.0, g);
    CHECK(proper.kappa1 <= 1.0 / 500.0);

    const auto bend = grid_validate_user1({10, 10, 0.8}, 10, 1.0, g);
    CHECK(std::abs(bend.kappa1 - 0.8) <= 1.0 / 500.0);
    CHECK(std::abs(bend.phi1 - std::numbers::pi) <= 2.0 * std::numbers::pi / 360.0);

    std::mt19937_64 gen(53);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        const auto s = random_scenario(gen);
        const double p2 = s.p2_budget * u(gen), k2 = u(gen);
        const auto best = grid_validate_user1(s, p2, k2, g);
        const double closed = rate1_reduced(s, p2, k2);
        CHECK(best.r1_best <= closed + 1e-9);
        const double k1 = std::min(p2 * k2 * s.a12 / s.p1_budget, 1.0);
        CHECK(std::abs(best.kappa1 - k1) <= 1.0 / 500.0 + 1e-12);
    }
}

TEST_CASE("Improper sampler reproduces the prescribed moments", "[oracle]")
{
    for (const TransmitParams t : {TransmitParams{2.0, 0.0, 0.0}, TransmitParams{3.0, 0.6, 1.1},
                                   TransmitParams{1.0, 1.0, 2.5}}) {
        const auto m = improper_sampling_matrix(t);
        // analytic second moments of the linear map
        const double xx = m[0] * m[0] + m[1] * m[1];
        const double yy = m[2] * m[2] + m[3] * m[3];
        const double xy = m[0] * m[2] + m[1] * m[3];
        CHECK(xx + yy == Approx(t.power).epsilon(1e-12));
        CHECK(xx - yy == Approx(t.power * t.circularity * std::cos(t.phase)).margin(1e-12));
        CHECK(2.0 * xy == Approx(t.power * t.circularity * std::sin(t.phase)).margin(1e-12));
        for (std::size_t n : {std::size_t{10000}, std::size_t{100000}}) {
            const double k = mc_sample_circularity(t, n, 3);
            CHECK(std::abs(k - t.circularity) <= 3.0 * 2.0 / std::sqrt(static_cast<double>(n)));
        }
    }
}

TEST_CASE("Monte Carlo rates: trivial targets", "[oracle]")
{
    const McSpec mc{1'000'000, 17, 0};
    const ZicScenario s{10, 10, 2};
    const auto proper = mc_rate_estimate(s, {10, 0, 0}, {10, 0, 0}, mc);
    CHECK(proper.r1_hat == Approx(std::log2(1.0 + 10.0 / 21.0)).margin(0.01));
    const auto silent = mc_rate_estimate(s, {10, 0, 0}, {0, 0, 0}, mc);
    CHECK(silent.r1_hat == Approx(std::log2(11.0)).margin(0.01));

    const TransmitParams t1{10, 1, std::numbers::pi}, t2{10, 1, 0};
    const auto [r1, r2] = rate_pair_general(s, t1, t2);
    const auto est = mc_rate_estimate(s, t1, t2, mc);
    CHECK(est.r1_hat == Approx(r1).margin(0.02));
    CHECK(est.r2_hat == Approx(r2).margin(0.02));

    // bit-reproducible for a fixed seed, whatever the thread count
    auto mc1 = mc;
    mc1.threads = 1;
    mc1.n_samples = 50000;
    auto mc5 = mc1;
    mc5.threads = 5;
    const auto e1 = mc_rate_estimate(s, t1, t2, mc1);
    const auto e5 = mc_rate_estimate(s, t1, t2, mc5);
    CHECK(e1.r1_hat == e5.r1_hat);
    CHECK(e1.r2_hat == e5.r2_hat);
}

TEST_CASE("Monte Carlo error shrinks with the sample count", "[oracle]")
{
    const ZicScenario s{10, 10, 0.8};
    const TransmitParams t2{6.0, 0.7, 0.0};
    const auto t1 = optimal_kappa1_phi1(s, t2);
    const auto [r1, r2] = rate_pair_general(s, t1, t2);
    double prev = 1e300;
    for (std::size_t n : {std::size_t{10000}, std::size_t{100000}, std::size_t{1000000}}) {
        std::vector<double> errs;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto e = mc_rate_estimate(s, t1, t2, McSpec{n, 1000 + seed, 0});
            errs.push_back(std::max(std::abs(e.r1_hat - r1), std::abs(e.r2_hat - r2)));
        }
        const double med = median(errs);
        CHECK(med <= prev);
        prev = med;
    }
}
