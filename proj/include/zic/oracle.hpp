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

#include "zic/constraints.hpp"
#include "zic/model.hpp"
#include "zic/parallel.hpp"
#include "zic/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zic {

/// Resolution of the brute-force grids. Grids are uniform in p2 over
/// [0, P2], in kappa over [0, 1] and in phase over [0, 2 pi).
struct GridSpec
{
    std::size_t p2_points = 2001;
    std::size_t kappa2_points = 2001;
    std::size_t kappa1_points = 501;
    std::size_t phi_points = 360;
    unsigned threads = 0;

    void validate() const
    {
        if (p2_points < 2 || kappa2_points < 2 || kappa1_points < 2 || phi_points < 2)
            throw std::invalid_argument("GridSpec: every grid needs at least 2 points");
    }

    /// Conservative bound on how far the grid optimum of R2 can sit from the
    /// continuous optimum: 10 * (dp + dkappa).
    [[nodiscard]] double resolution_bound(double p2_budget) const
    {
        const double dp = p2_budget / static_cast<double>(p2_points - 1);
        const double dk = 1.0 / static_cast<double>(kappa2_points - 1);
        return 10.0 * (dp + dk);
    }
};

struct McSpec
{
    std::size_t n_samples = 1'000'000;
    std::uint64_t seed = 0x5eed;
    unsigned threads = 0;

    void validate() const
    {
        if (n_samples < 1000)
            throw std::invalid_argument("McSpec: n_samples must be at least 1000");
    }
};

struct GridSolution
{
    double r2_best = 0.0;
    double p2 = 0.0;
    double kappa2 = 0.0;
    double r1 = 0.0;
};

/// Exhaustive maximisation of R2 over the (p2, kappa2) grid subject to the
/// user-1 rate constraint. Ties go to the smaller p2, then smaller kappa2,
/// so the result does not depend on how rows are split across threads.
inline GridSolution grid_solve(const ZicScenario &s, const RateTarget &rt, const GridSpec &g)
{
    s.validate();
    g.validate();
    const std::size_t np = g.p2_points;
    const std::size_t nk = g.kappa2_points;
    auto p_at = [&](std::size_t i) { return s.p2_budget * static_cast<double>(i) / static_cast<double>(np - 1); };
    auto k_at = [&](std::size_t j) { return static_cast<double>(j) / static_cast<double>(nk - 1); };

    struct Best
    {
        double r2 = -1.0;
        std::size_t i = 0, j = 0;
    };
    auto better = [](const Best &a, const Best &b) {
        if (a.r2 != b.r2)
            return a.r2 > b.r2;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };

    unsigned threads = g.threads ? g.threads : default_thread_count();
    std::vector<Best> partial(threads);
    parallel_chunks(np, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
        Best local;
        for (std::size_t i = begin; i < end; ++i) {
            const double p2 = p_at(i);
            for (std::size_t j = 0; j < nk; ++j) {
                const double k2 = k_at(j);
                if (!rate_constraint_satisfied(s, rt, p2, k2))
                    continue;
                const Best cand{rate2_reduced(p2, k2), i, j};
                if (better(cand, local))
                    local = cand;
            }
        }
        partial[w] = local;
    });

    Best best;
    for (const auto &b : partial)
        if (b.r2 >= 0.0 && better(b, best))
            best = b;
    GridSolution out;
    if (best.r2 < 0.0)
        return out; // nothing feasible: silent user 2
    out.p2 = p_at(best.i);
    out.kappa2 = k_at(best.j);
    out.r2_best = best.r2;
    out.r1 = rate1_reduced(s, out.p2, out.kappa2);
    return out;
}

struct User1GridSolution
{
    double r1_best = 0.0;
    double kappa1 = 0.0;
    double phi1 = 0.0;
};

/// Maximises the general user-1 rate over a (kappa1, phi1) grid with P1 fixed
/// and phi2 = 0.
inline User1GridSolution grid_validate_user1(const ZicScenario &s, double p2, double kappa2, const GridSpec &g)
{
    s.validate();
    g.validate();
    const TransmitParams t2{p2, kappa2, 0.0};
    User1GridSolution best{-1.0, 0.0, 0.0};
    for (std::size_t i = 0; i < g.kappa1_points; ++i) {
        const double k1 = static_cast<double>(i) / static_cast<double>(g.kappa1_points - 1);
        for (std::size_t j = 0; j < g.phi_points; ++j) {
            const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(g.phi_points);
            const double r1 = rate_pair_general(s, {s.p1_budget, k1, phi}, t2).first;
            if (r1 > best.r1_best)
                best = {r1, k1, phi};
        }
    }
    return best;
}

/// Symmetric square root of the real-composite covariance of an improper
/// complex Gaussian with variance p, circularity kappa and phase phi:
///   [[p (1 + k cos phi) / 2, p k sin phi / 2], [p k sin phi / 2, p (1 - k cos phi) / 2]].
inline std::array<double, 4> improper_sampling_matrix(const TransmitParams &t)
{
    const double c = std::cos(0.5 * t.phase);
    const double sn = std::sin(0.5 * t.phase);
    const double major = std::sqrt(0.5 * t.power * (1.0 + t.circularity));
    const double minor = std::sqrt(0.5 * t.power * std::max(1.0 - t.circularity, 0.0));
    // R diag(major, minor) R^T with R the rotation by phi / 2
    return {major * c * c + minor * sn * sn, (major - minor) * c * sn, (major - minor) * c * sn,
            major * sn * sn + minor * c * c};
}

/// Draws one improper complex Gaussian sample from two standard normals.
inline std::complex<double> improper_sample(const std::array<double, 4> &m, double n0, double n1)
{
    return {m[0] * n0 + m[1] * n1, m[2] * n0 + m[3] * n1};
}

struct McEstimate
{
    double r1_hat = 0.0;
    double r2_hat = 0.0;
    bool regularized = false; // a sample augmented covariance needed the ridge
};

namespace detail {

struct MomentSums
{
    double y1 = 0.0, z1 = 0.0, y2 = 0.0, z2 = 0.0;
    std::complex<double> ty1{}, tz1{}, ty2{}, tz2{};

    MomentSums &operator+=(const MomentSums &o)
    {
        y1 += o.y1, z1 += o.z1, y2 += o.y2, z2 += o.z2;
        ty1 += o.ty1, tz1 += o.tz1, ty2 += o.ty2, tz2 += o.tz2;
        return *this;
    }
};

} // namespace detail

/// Monte Carlo estimate of both rates: simulate the channel with sampled
/// improper Gaussian inputs and proper unit noise, estimate the augmented
/// second-order moments of y_i and z_i, and evaluate the log-determinant
/// rate on those sample moments.
///
/// Sample i uses Philox counters (i, lane) for lanes 0..3, and partial sums
/// are accumulated in fixed blocks of 4096 samples, so the estimate depends
/// only on (inputs, seed, n_samples).
inline McEstimate mc_rate_estimate(const ZicScenario &s, const TransmitParams &t1, const TransmitParams &t2,
                                   const McSpec &m)
{
    s.validate();
    t1.validate();
    t2.validate();
    m.validate();
    const Philox4x32 rng(m.seed);
    const auto m1 = improper_sampling_matrix(t1);
    const auto m2 = improper_sampling_matrix(t2);
    const double sqrt_a = std::sqrt(s.a12);
    const double noise_sd = std::sqrt(0.5);

    constexpr std::size_t block = 4096;
    const std::size_t n = m.n_samples;
    const std::size_t n_blocks = (n + block - 1) / block;
    std::vector<detail::MomentSums> blocks(n_blocks);
    parallel_chunks(n_blocks, m.threads, [&](std::size_t b_begin, std::size_t b_end, unsigned) {
        for (std::size_t b = b_begin; b < b_end; ++b) {
            detail::MomentSums acc;
            const std::size_t end = std::min(n, (b + 1) * block);
            for (std::size_t i = b * block; i < end; ++i) {
                const auto g0 = rng.normal_pair(i, 0);
                const auto g1 = rng.normal_pair(i, 1);
                const auto g2 = rng.normal_pair(i, 2);
                const auto g3 = rng.normal_pair(i, 3);
                const auto s1 = improper_sample(m1, g0[0], g0[1]);
                const auto s2 = improper_sample(m2, g1[0], g1[1]);
                const std::complex<double> n1{noise_sd * g2[0], noise_sd * g2[1]};
                const std::complex<double> n2{noise_sd * g3[0], noise_sd * g3[1]};
                const auto z1 = sqrt_a * s2 + n1;
                const auto y1 = s1 + z1;
                const auto y2 = s2 + n2;
                acc.y1 += std::norm(y1);
                acc.z1 += std::norm(z1);
                acc.y2 += std::norm(y2);
                acc.z2 += std::norm(n2);
                acc.ty1 += y1 * y1;
                acc.tz1 += z1 * z1;
                acc.ty2 += y2 * y2;
                acc.tz2 += n2 * n2;
            }
            blocks[b] = acc;
        }
    });
    detail::MomentSums total;
    for (const auto &b : blocks)
        total += b;

    const double inv_n = 1.0 / static_cast<double>(n);
    McEstimate est;
    auto log_det_half = [&](double c, std::complex<double> ct) {
        double det = c * c - std::norm(ct);
        if (det <= 1e-12) {
            det += 1e-12;
            est.regularized = true;
        }
        return 0.5 * std::log2(det);
    };
    est.r1_hat = log_det_half(total.y1 * inv_n, total.ty1 * inv_n) - log_det_half(total.z1 * inv_n, total.tz1 * inv_n);
    est.r2_hat = log_det_half(total.y2 * inv_n, total.ty2 * inv_n) - log_det_half(total.z2 * inv_n, total.tz2 * inv_n);
    return est;
}

/// Sample circularity coefficient |E[s^2]| / E[|s|^2] of n generated draws;
/// used to check the sampler itself.
inline double mc_sample_circularity(const TransmitParams &t, std::size_t n, std::uint64_t seed)
{
    const Philox4x32 rng(seed);
    const auto mtx = improper_sampling_matrix(t);
    double power = 0.0;
    std::complex<double> comp{};
    for (std::size_t i = 0; i < n; ++i) {
        const auto g = rng.normal_pair(i, 1);
        const auto x = improper_sample(mtx, g[0], g[1]);
        power += std::norm(x);
        comp += x * x;
    }
    return std::abs(comp) / power;
}

} // namespace zic
