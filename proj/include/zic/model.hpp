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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace zic {

/// Channel and power parameters of a Z interference channel in standard form
/// (unit direct gains, unit noise variance at both receivers).
struct ZicScenario
{
    double p1_budget = 1.0; // P1, linear
    double p2_budget = 1.0; // P2, linear
    double a12 = 0.0;       // power gain of the link transmitter 2 -> receiver 1

    void validate() const
    {
        if (!(p1_budget > 0.0) || !std::isfinite(p1_budget))
            throw std::domain_error("ZicScenario: p1_budget must be positive and finite");
        if (!(p2_budget > 0.0) || !std::isfinite(p2_budget))
            throw std::domain_error("ZicScenario: p2_budget must be positive and finite");
        if (!(a12 >= 0.0) || !std::isfinite(a12))
            throw std::domain_error("ZicScenario: a12 must be nonnegative and finite");
    }
};

/// Per-user transmit parameters. The complementary variance is
/// power * circularity * exp(j * phase).
struct TransmitParams
{
    double power = 0.0;
    double circularity = 0.0;
    double phase = 0.0;

    [[nodiscard]] std::complex<double> complementary_variance() const
    {
        return std::polar(power * circularity, phase);
    }

    void validate() const
    {
        if (!(power >= 0.0) || !std::isfinite(power))
            throw std::domain_error("TransmitParams: power must be nonnegative and finite");
        if (!(circularity >= 0.0 && circularity <= 1.0))
            throw std::domain_error("TransmitParams: circularity must lie in [0, 1]");
        if (!std::isfinite(phase))
            throw std::domain_error("TransmitParams: phase must be finite");
    }
};

/// Second-order moments of the received and interference-plus-noise signals
/// in the augmented complex description.
struct AugmentedMoments
{
    double c_y1 = 1.0, c_y2 = 1.0;
    std::complex<double> ct_y1{}, ct_y2{};
    double c_z1 = 1.0, c_z2 = 1.0;
    std::complex<double> ct_z1{}, ct_z2{};
};

/// Rate demand on user 1, parametrised by the fraction alpha of its
/// interference-free rate.
struct RateTarget
{
    double alpha = 0.0;
    double r_bar = 0.0;       // alpha * log2(1 + P1)
    double gamma_rbar = 0.0;  // 2^r_bar - 1
    double gamma_2rbar = 0.0; // 2^(2 r_bar) - 1

    static RateTarget from_alpha(const ZicScenario &s, double alpha)
    {
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw std::domain_error("RateTarget: alpha must lie in [0, 1]");
        const double ln_snr = std::log1p(s.p1_budget);
        RateTarget rt;
        rt.alpha = alpha;
        rt.r_bar = alpha * ln_snr / std::numbers::ln2;
        rt.gamma_rbar = std::expm1(alpha * ln_snr);
        rt.gamma_2rbar = std::expm1(2.0 * alpha * ln_snr);
        return rt;
    }

    /// Target given directly as a rate in b/s/Hz; must not exceed log2(1 + P1).
    static RateTarget from_rate(const ZicScenario &s, double r_bar)
    {
        const double r_max = std::log2(1.0 + s.p1_budget);
        if (!(r_bar >= 0.0) || r_bar > r_max * (1.0 + 1e-15))
            throw std::domain_error("RateTarget: rate must lie in [0, log2(1 + P1)]");
        return from_alpha(s, std::min(r_bar / r_max, 1.0));
    }
};

inline constexpr double kBranchTieTolerance = 1e-12;
inline constexpr double kTransitionTolerance = 1e-12;

/// The alpha at which 2 P1 = gamma_2rbar, i.e. R = 0.5 log2(1 + 2 P1).
inline double transition_alpha(const ZicScenario &s)
{
    return std::log1p(2.0 * s.p1_budget) / (2.0 * std::log1p(s.p1_budget));
}

/// True when the target sits on the power-limited / interference-limited
/// border (2 P1 = gamma_2rbar up to a relative tolerance of 1e-12).
inline bool at_region_transition(const ZicScenario &s, const RateTarget &rt)
{
    return std::abs(rt.gamma_2rbar / (2.0 * s.p1_budget) - 1.0) <= kTransitionTolerance;
}

inline AugmentedMoments augmented_moments(const ZicScenario &s, const TransmitParams &t1,
                                          const TransmitParams &t2)
{
    const auto pt1 = t1.complementary_variance();
    const auto pt2 = t2.complementary_variance();
    AugmentedMoments m;
    m.c_y1 = t1.power + t2.power * s.a12 + 1.0;
    m.c_y2 = t2.power + 1.0;
    m.ct_y1 = pt1 + pt2 * s.a12;
    m.ct_y2 = pt2;
    m.c_z1 = t2.power * s.a12 + 1.0;
    m.c_z2 = 1.0;
    m.ct_z1 = pt2 * s.a12;
    m.ct_z2 = 0.0;
    return m;
}

/// Achievable rates (b/s/Hz) of both users for arbitrary improper Gaussian
/// inputs, interference treated as noise, widely linear reception.
///
/// Each rate is half the log-ratio of the augmented covariance determinants
/// of the received and interference-plus-noise signals.
inline std::pair<double, double> rate_pair_general(const ZicScenario &s, const TransmitParams &t1,
                                                   const TransmitParams &t2)
{
    s.validate();
    t1.validate();
    t2.validate();
    const auto m = augmented_moments(s, t1, t2);
    auto half_log_det_ratio = [](double cy, std::complex<double> cty, double cz, std::complex<double> ctz) {
        const double num = (cy - std::abs(cty)) * (cy + std::abs(cty));
        const double den = (cz - std::abs(ctz)) * (cz + std::abs(ctz));
        return 0.5 * std::log2(num / den);
    };
    const double r1 = half_log_det_ratio(m.c_y1, m.ct_y1, m.c_z1, m.ct_z1);
    const double r2 = half_log_det_ratio(m.c_y2, m.ct_y2, m.c_z2, m.ct_z2);
    return {std::max(r1, 0.0), std::max(r2, 0.0)};
}

/// Rate-maximising parameters of user 1 for a given user-2 signal: full power,
/// circularity min(p2 k2 a12 / P1, 1), and phase opposite to the interference.
inline TransmitParams optimal_kappa1_phi1(const ZicScenario &s, const TransmitParams &t2)
{
    s.validate();
    t2.validate();
    TransmitParams t1;
    t1.power = s.p1_budget;
    t1.circularity = std::min(t2.power * t2.circularity * s.a12 / s.p1_budget, 1.0);
    t1.phase = std::fmod(t2.phase + std::numbers::pi, 2.0 * std::numbers::pi);
    if (t1.phase < 0.0)
        t1.phase += 2.0 * std::numbers::pi;
    return t1;
}

/// User-1 rate with user 1 playing its best response, as a function of the
/// user-2 power and circularity only.
inline double rate1_reduced(const ZicScenario &s, double p2, double kappa2)
{
    if (s.a12 == 0.0)
        return std::log2(1.0 + s.p1_budget);
    const double x = p2 * s.a12;
    const double k2sq = kappa2 * kappa2;
    const double interference_det = 1.0 + x * (x * (1.0 - k2sq) + 2.0);
    const double kappa1_candidate = x * kappa2 / s.p1_budget;
    if (kappa1_candidate < 1.0 - kBranchTieTolerance) {
        const double num = x + s.p1_budget + 1.0;
        return 0.5 * std::log2(num * num / interference_det);
    }
    return 0.5 * std::log2(1.0 + 2.0 * s.p1_budget * (x * (1.0 + kappa2) + 1.0) / interference_det);
}

/// User-2 rate; user 2 sees no interference.
inline double rate2_reduced(double p2, double kappa2)
{
    return 0.5 * std::log2(1.0 + p2 * (p2 * (1.0 - kappa2 * kappa2) + 2.0));
}

} // namespace zic
