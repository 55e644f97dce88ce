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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>

namespace zic {

/// Channel-gain thresholds for one (scenario, alpha).
///
/// mu and iota govern how the user-2 rate behaves along the interference
/// cap q(kappa2) with the power budget ignored; rho adds the budget. Improper
/// signaling is optimal iff a12 > max(iota, rho).
struct ThresholdSet
{
    double mu = 0.0;
    double iota = 0.0;
    double rho = 0.0;
    double nu = 0.0;
    double eta = 0.0;
    double a_p = 0.0;
    double a_i = 0.0;
    bool improper_optimal = false;
    bool vacuous = false; // alpha = 0: no rate demand on user 1
};

enum class Regime { StrictlyImproper, SelectiveImproperProper, StrictlyProper };
enum class Region { PowerLimited, InterferenceLimited };
enum class MonotonicityCase { AlwaysIncreasing, CrossesProper, NeverBeatsProper };

struct RegimeLabel
{
    Regime regime = Regime::StrictlyProper;
    Region region = Region::PowerLimited;
};

inline std::string_view to_string(Regime r)
{
    switch (r) {
    case Regime::StrictlyImproper: return "strictly-improper";
    case Regime::SelectiveImproperProper: return "selective";
    case Regime::StrictlyProper: return "strictly-proper";
    }
    return "?";
}

inline std::string_view to_string(Region r)
{
    return r == Region::PowerLimited ? "power-limited" : "interference-limited";
}

inline std::string_view to_string(MonotonicityCase c)
{
    switch (c) {
    case MonotonicityCase::AlwaysIncreasing: return "always-increasing";
    case MonotonicityCase::CrossesProper: return "crosses-proper";
    case MonotonicityCase::NeverBeatsProper: return "never-beats-proper";
    }
    return "?";
}

inline Region classify_region(const ZicScenario &s, const RateTarget &rt)
{
    if (2.0 * s.p1_budget >= rt.gamma_2rbar || at_region_transition(s, rt))
        return Region::PowerLimited;
    return Region::InterferenceLimited;
}

/// Right limit of iota at the power-limited / interference-limited border.
inline double iota_right_limit(double p1)
{
    return 0.25 * (1.0 - 1.0 / std::sqrt(1.0 + 2.0 * p1));
}

namespace detail {

// iota after rationalising sqrt(g - 2 P1) - gamma_R; the textbook form
// (P1 - gR)^2 / ((g - gR)(sqrt(g - 2 P1) - gR)^2) is 0/0 at alpha = 1.
inline double iota_interference_limited(double p1, double gamma_r, double gamma_2r)
{
    const double root = std::sqrt(std::max(gamma_2r - 2.0 * p1, 0.0)) + gamma_r;
    return root * root / (4.0 * gamma_r * (gamma_r + 1.0));
}

} // namespace detail

inline ThresholdSet compute_thresholds(const ZicScenario &s, const RateTarget &rt)
{
    s.validate();
    constexpr double inf = std::numeric_limits<double>::infinity();
    ThresholdSet t;
    if (rt.r_bar == 0.0) {
        t.vacuous = true;
        t.mu = -inf;
        t.iota = 0.0;
        t.rho = t.nu = t.eta = t.a_p = t.a_i = inf;
        t.improper_optimal = false;
        return t;
    }

    const double p1 = s.p1_budget;
    const double p2 = s.p2_budget;
    const double gr = rt.gamma_rbar;
    const bool on_border = at_region_transition(s, rt);
    const double g = on_border ? 2.0 * p1 : rt.gamma_2rbar;

    t.mu = 1.0 - p1 / (gr * (gr + 1.0)); // g - gR = gR (gR + 1)
    t.iota = classify_region(s, rt) == Region::PowerLimited
                 ? 0.0
                 : detail::iota_interference_limited(p1, gr, g);

    t.a_p = (p1 / gr - 1.0) / p2;
    t.a_i = (2.0 * p1 / g - 1.0) / p2;
    const double lin = t.a_p - p2 * t.a_i;
    const double disc = std::max(lin * lin + 2.0 * p2 * (t.a_i * t.a_i + t.a_p * t.a_p), 0.0);
    t.eta = 0.5 * (lin + std::sqrt(disc));
    if (t.eta >= p1 / p2 + t.a_i)
        t.nu = t.eta;
    else
        t.nu = (gr * (2.0 * g + 1.0) - p1 * (2.0 * gr + 1.0)) / (gr * (p2 + 2.0 * (g + 1.0)));
    t.rho = std::max(t.a_p, t.nu);
    t.improper_optimal = s.a12 > std::max(t.iota, t.rho);
    return t;
}

inline MonotonicityCase monotonicity_case(const ZicScenario &s, const RateTarget &rt)
{
    const auto t = compute_thresholds(s, rt);
    if (s.a12 >= t.mu)
        return MonotonicityCase::AlwaysIncreasing;
    if (s.a12 > t.iota)
        return MonotonicityCase::CrossesProper;
    return MonotonicityCase::NeverBeatsProper;
}

/// a12 threshold above which every boundary point beyond the proper
/// full-power corner uses improper signaling.
inline double strictly_improper_threshold(const ZicScenario &s)
{
    return s.p1_budget / (s.p1_budget + 1.0);
}

struct MinThreshold
{
    double value = 0.0; // min over alpha of max(iota, rho)
    double alpha = 0.0; // minimiser
};

/// min over alpha in (0, 1] of max(iota(alpha), rho(alpha)).
///
/// A 1024-point grid locates the best cell; golden-section search then
/// refines inside the neighbouring cells down to 1e-10 in alpha. The value
/// returned is the smallest evaluated, so a jump of iota inside the bracket
/// cannot push the result above a sampled value.
inline MinThreshold min_alpha_threshold(const ZicScenario &s)
{
    auto f = [&](double alpha) {
        const auto t = compute_thresholds(s, RateTarget::from_alpha(s, alpha));
        return std::max(t.iota, t.rho);
    };
    constexpr int grid = 1024;
    MinThreshold best{std::numeric_limits<double>::infinity(), 1.0};
    int best_i = grid;
    for (int i = 1; i <= grid; ++i) {
        const double alpha = static_cast<double>(i) / grid;
        const double v = f(alpha);
        if (v < best.value) {
            best = {v, alpha};
            best_i = i;
        }
    }
    auto consider = [&](double alpha) {
        const double v = f(alpha);
        if (v < best.value)
            best = {v, alpha};
        return v;
    };
    double lo = std::max(static_cast<double>(best_i - 1) / grid, 1e-12);
    double hi = std::min(static_cast<double>(best_i + 1) / grid, 1.0);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = consider(x1);
    double f2 = consider(x2);
    while (hi - lo > 1e-10) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = consider(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = consider(x2);
        }
    }
    consider(lo);
    consider(hi);
    return best;
}

inline Regime classify_regime(const ZicScenario &s)
{
    s.validate();
    if (s.a12 >= strictly_improper_threshold(s))
        return Regime::StrictlyImproper;
    if (s.a12 <= min_alpha_threshold(s).value)
        return Regime::StrictlyProper;
    return Regime::SelectiveImproperProper;
}

} // namespace zic
