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

#include "zic/model.hpp"

#include <cmath>
#include <limits>

namespace zic {

enum class CapBranch { Kappa1LessThanOne, Kappa1EqualOne };

/// Largest user-2 power that keeps user 1 at its target rate for a given
/// user-2 circularity coefficient.
struct PowerCap
{
    double q_value = std::numeric_limits<double>::infinity(); // may be +inf
    CapBranch branch = CapBranch::Kappa1LessThanOne;
    double effective = 0.0;       // min(q_value, P2)
    bool clamped_negative = false; // a slightly negative root was clamped to 0
};

namespace detail {

// Positive root of
//   a12^2 D p^2 - 2 a12 (P1 - g) p + (g + 1 - (1 + P1)^2) = 0,
//   D = (g + 1)(1 - k^2) - 1,
// written in the cancellation-free form C / (a12 (P1 - g - sqrt(disc))).
// Returns NaN when no real root exists.
inline double cap_root_kappa1_below_one(double p1, double a12, double g, double kappa2)
{
    const double k2sq = kappa2 * kappa2;
    const double disc = (g + 1.0) * (p1 * p1 * (1.0 - k2sq) + (g - 2.0 * p1) * k2sq);
    if (disc < 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    const double root_disc = std::sqrt(disc);
    const double c = (g + 1.0) - (1.0 + p1) * (1.0 + p1);
    const double b = p1 - g;
    if (b <= 0.0) {
        const double den = b - root_disc;
        if (den == 0.0)
            return std::numeric_limits<double>::quiet_NaN();
        return c / (a12 * den);
    }
    const double d = (g + 1.0) * (1.0 - k2sq) - 1.0;
    if (std::abs(d) < 1e-10) {
        // vanishing quadratic coefficient: the linear equation has a
        // nonpositive root when P1 > g, so the branch does not bind
        return std::numeric_limits<double>::quiet_NaN();
    }
    return (b + root_disc) / (a12 * d);
}

// Root of the maximally improper user-1 branch; requires 2 P1 >= g.
inline double cap_root_kappa1_one(double p1, double a12, double g, double kappa2)
{
    if (kappa2 >= 1.0)
        return std::numeric_limits<double>::infinity();
    return (2.0 * p1 / g - 1.0) / (a12 * (1.0 - kappa2));
}

} // namespace detail

/// Equivalent power cap q(kappa2): R1(p2, kappa2) >= R  <=>  p2 <= q(kappa2).
inline PowerCap power_cap(const ZicScenario &s, const RateTarget &rt, double kappa2)
{
    if (!(kappa2 >= 0.0 && kappa2 <= 1.0))
        throw std::domain_error("power_cap: kappa2 must lie in [0, 1]");
    constexpr double inf = std::numeric_limits<double>::infinity();
    PowerCap cap;
    if (s.a12 == 0.0 || rt.r_bar == 0.0) {
        cap.q_value = inf;
        cap.effective = s.p2_budget;
        return cap;
    }

    const double p1 = s.p1_budget;
    const bool on_border = at_region_transition(s, rt);
    const double g = on_border ? 2.0 * p1 : rt.gamma_2rbar;

    if (on_border && kappa2 == 1.0) {
        // user 1 meets the target only when the interference lies entirely
        // in the unused real dimension, and then tolerates any amount of it
        cap.q_value = inf;
        cap.branch = CapBranch::Kappa1EqualOne;
        cap.effective = s.p2_budget;
        return cap;
    }

    double q = detail::cap_root_kappa1_below_one(p1, s.a12, g, kappa2);
    const bool first_ok = std::isfinite(q) && q >= -1e-12 * (1.0 + p1 / s.a12) &&
                          q * kappa2 * s.a12 / p1 < 1.0;
    if (first_ok) {
        cap.branch = CapBranch::Kappa1LessThanOne;
    } else if (2.0 * p1 >= g) {
        q = detail::cap_root_kappa1_one(p1, s.a12, g, kappa2);
        cap.branch = CapBranch::Kappa1EqualOne;
    } else {
        // only reachable through rounding at the kappa1 = 1 seam
        cap.branch = CapBranch::Kappa1LessThanOne;
    }
    if (std::isnan(q))
        q = 0.0;
    if (q < 0.0) {
        q = 0.0;
        cap.clamped_negative = true;
    }
    cap.q_value = q;
    cap.effective = std::min(q, s.p2_budget);
    return cap;
}

inline bool rate_constraint_satisfied(const ZicScenario &s, const RateTarget &rt, double p2, double kappa2)
{
    return rate1_reduced(s, p2, kappa2) >= rt.r_bar - 1e-12;
}

} // namespace zic
