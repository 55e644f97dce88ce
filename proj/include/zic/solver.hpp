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
#include "zic/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <string_view>
#include <vector>

namespace zic {

enum class SolutionBranch { ProperOptimal, ImproperKappaMax, ImproperMaximal };
enum class DiscontinuityKind { RegionTransition, ThresholdCrossing };
enum class AlphaSpacing { UniformAlpha, UniformR1 };

inline std::string_view to_string(SolutionBranch b)
{
    switch (b) {
    case SolutionBranch::ProperOptimal: return "proper";
    case SolutionBranch::ImproperKappaMax: return "improper-kappa-max";
    case SolutionBranch::ImproperMaximal: return "improper-maximal";
    }
    return "?";
}

inline std::string_view to_string(DiscontinuityKind k)
{
    return k == DiscontinuityKind::RegionTransition ? "region-transition" : "threshold-crossing";
}

/// One Pareto-optimal operating point.
struct BoundaryPoint
{
    double alpha = 0.0;
    double r_bar = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r2_proper = 0.0; // best user-2 rate at the same alpha with proper signals only
    double p2 = 0.0;
    double kappa2 = 0.0;
    double kappa1 = 0.0;
    double phase_delta = 0.0; // phi1 - phi2; pi whenever p2 * kappa2 > 0
    SolutionBranch branch = SolutionBranch::ProperOptimal;
    Region region = Region::PowerLimited;
};

struct Discontinuity
{
    DiscontinuityKind kind = DiscontinuityKind::RegionTransition;
    double alpha = 0.0;
    double r1_location = 0.0;
    double r2_left = 0.0; // limit for r1 approaching from below
    double r2_right = 0.0;
    double p2_left = 0.0;
    double p2_right = 0.0;
    double kappa2_left = 0.0;
    double kappa2_right = 0.0;
};

struct RatePair
{
    double r1 = 0.0;
    double r2 = 0.0;
};

struct ParetoBoundary
{
    ZicScenario scenario;
    std::vector<BoundaryPoint> points; // ascending r1
    std::vector<Discontinuity> discontinuities;
    std::vector<RatePair> convex_hull; // upper concave envelope, ascending r1
    std::optional<double> bend_alpha;   // where the slope regime of r2(r1) changes
};

/// Smallest kappa2 with q(kappa2) = P2.
///
/// Requires q(0) <= P2 <= q(1); throws std::domain_error naming the violated
/// side otherwise.
inline double kappa_max(const ZicScenario &s, const RateTarget &rt)
{
    const double p1 = s.p1_budget;
    const double p2 = s.p2_budget;
    const double a = s.a12;
    const double q0 = power_cap(s, rt, 0.0).q_value;
    const double q1 = power_cap(s, rt, 1.0).q_value;
    if (q0 > p2 * (1.0 + 1e-12))
        throw std::domain_error("kappa_max: q(0) > P2, proper signaling already fills the budget side");
    if (q1 < p2 * (1.0 - 1e-12))
        throw std::domain_error("kappa_max: q(1) < P2, the interference cap binds before the budget");
    if (q0 >= p2)
        return 0.0;

    const double g = at_region_transition(s, rt) ? 2.0 * p1 : rt.gamma_2rbar;
    const double x = p2 * a;
    const double num = x * (x * g - 2.0 * (p1 - g)) + g + 1.0 - (1.0 + p1) * (1.0 + p1);
    const double den = x * x * (g + 1.0);
    const double k_below = std::sqrt(std::clamp(num / den, 0.0, 1.0));
    if (x * k_below / p1 < 1.0 || 2.0 * p1 < g)
        return k_below;
    const double a_i = (2.0 * p1 / g - 1.0) / p2;
    return std::clamp(1.0 - a_i / a, 0.0, 1.0);
}

namespace detail {

inline BoundaryPoint make_point(const ZicScenario &s, const RateTarget &rt, double p2, double kappa2,
                                SolutionBranch branch)
{
    BoundaryPoint pt;
    pt.alpha = rt.alpha;
    pt.r_bar = rt.r_bar;
    pt.region = classify_region(s, rt);
    // without power R2 is 0 whatever kappa2 says; kappa2 is kept as given
    p2 = std::max(p2, 0.0);
    pt.p2 = p2;
    pt.kappa2 = kappa2;
    pt.branch = branch;
    pt.kappa1 = std::min(p2 * kappa2 * s.a12 / s.p1_budget, 1.0);
    pt.phase_delta = p2 * kappa2 > 0.0 ? std::numbers::pi : 0.0;
    pt.r1 = rate1_reduced(s, p2, kappa2);
    pt.r2 = rate2_reduced(p2, kappa2);
    const double p2_proper = std::min(power_cap(s, rt, 0.0).q_value, s.p2_budget);
    pt.r2_proper = rate2_reduced(p2_proper, 0.0);
    return pt;
}

inline BoundaryPoint proper_solution(const ZicScenario &s, const RateTarget &rt)
{
    const double p2 = std::min(power_cap(s, rt, 0.0).q_value, s.p2_budget);
    return make_point(s, rt, p2, 0.0, SolutionBranch::ProperOptimal);
}

inline BoundaryPoint improper_solution(const ZicScenario &s, const RateTarget &rt)
{
    const double q1 = power_cap(s, rt, 1.0).q_value;
    if (q1 <= s.p2_budget)
        return make_point(s, rt, q1, 1.0, SolutionBranch::ImproperMaximal);
    return make_point(s, rt, s.p2_budget, kappa_max(s, rt), SolutionBranch::ImproperKappaMax);
}

} // namespace detail

/// Pareto-optimal point for user-1 rate demand rt: maximises R2 subject to
/// R1 >= rt.r_bar and the power and circularity constraints.
inline BoundaryPoint solve_point(const ZicScenario &s, const RateTarget &rt)
{
    s.validate();
    const auto t = compute_thresholds(s, rt);
    if (t.improper_optimal)
        return detail::improper_solution(s, rt);
    return detail::proper_solution(s, rt);
}

inline BoundaryPoint solve_point(const ZicScenario &s, double alpha)
{
    return solve_point(s, RateTarget::from_alpha(s, alpha));
}

/// Upper concave envelope of a set of rate pairs (monotone chain). Points
/// within 1e-12 of a hull edge are merged into it.
inline std::vector<RatePair> upper_hull(std::vector<RatePair> pts)
{
    std::sort(pts.begin(), pts.end(), [](const RatePair &a, const RatePair &b) {
        return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 > b.r2);
    });
    std::vector<RatePair> hull;
    for (const auto &p : pts) {
        if (!hull.empty() && hull.back().r1 == p.r1 && hull.size() > 1)
            continue; // same abscissa, lower ordinate
        while (hull.size() >= 2) {
            const auto &o = hull[hull.size() - 2];
            const auto &m = hull.back();
            const double cross = (m.r1 - o.r1) * (p.r2 - o.r2) - (m.r2 - o.r2) * (p.r1 - o.r1);
            if (cross < -1e-12)
                break;
            hull.pop_back();
        }
        if (!hull.empty() && hull.back().r1 == p.r1 && hull.back().r2 == p.r2)
            continue;
        hull.push_back(p);
    }
    return hull;
}

namespace detail {

// a12 - max(iota, rho); positive iff improper signaling is optimal.
// right_of_border evaluates the interference-limited limit at the border.
inline double improper_margin(const ZicScenario &s, const RateTarget &rt, bool right_of_border = false)
{
    const auto t = compute_thresholds(s, rt);
    const double iota = right_of_border ? iota_right_limit(s.p1_budget) : t.iota;
    return s.a12 - std::max(iota, t.rho);
}

inline bool improper_optimal_at(const ZicScenario &s, const RateTarget &rt, bool right_of_border = false)
{
    return rt.r_bar > 0.0 && improper_margin(s, rt, right_of_border) > 0.0;
}

// Limit of the optimal point as alpha approaches the power-limited /
// interference-limited border from the interference-limited side.
inline BoundaryPoint right_limit_at_border(const ZicScenario &s, const RateTarget &rt_border)
{
    if (improper_optimal_at(s, rt_border, true)) {
        const double p2 = std::min(s.p1_budget / s.a12, s.p2_budget);
        auto pt = make_point(s, rt_border, p2, 1.0,
                             p2 < s.p2_budget ? SolutionBranch::ImproperMaximal
                                              : SolutionBranch::ImproperKappaMax);
        pt.region = Region::InterferenceLimited;
        return pt;
    }
    auto pt = proper_solution(s, rt_border);
    pt.region = Region::InterferenceLimited;
    return pt;
}

inline Discontinuity make_discontinuity(DiscontinuityKind kind, double alpha, double r1,
                                        const BoundaryPoint &left, const BoundaryPoint &right)
{
    Discontinuity d;
    d.kind = kind;
    d.alpha = alpha;
    d.r1_location = r1;
    d.r2_left = left.r2;
    d.r2_right = right.r2;
    d.p2_left = left.p2;
    d.p2_right = right.p2;
    d.kappa2_left = left.kappa2;
    d.kappa2_right = right.kappa2;
    return d;
}

// A sign change of improper_margin, bracketed to 1e-10 in alpha.
struct MarginCrossing
{
    double alpha = 0.0;        // bracket midpoint
    double improper_side = 0.0; // bracket end where improper signaling wins
    double proper_side = 0.0;
    bool improper_on_left = false;
};

// Sign changes of improper_margin over (lo, hi], localised by bisection.
inline std::vector<MarginCrossing> margin_sign_changes(const ZicScenario &s, double lo, double hi, bool lo_is_border)
{
    constexpr int scan = 2048;
    std::vector<MarginCrossing> roots;
    auto sign_at = [&](double alpha, bool border_limit) {
        return improper_optimal_at(s, RateTarget::from_alpha(s, alpha), border_limit);
    };
    double prev_alpha = lo;
    bool prev = sign_at(lo, lo_is_border);
    for (int i = 1; i <= scan; ++i) {
        const double alpha = lo + (hi - lo) * static_cast<double>(i) / scan;
        const bool cur = sign_at(alpha, false);
        if (cur != prev) {
            double a = prev_alpha, b = alpha;
            const bool sa = prev;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b);
                if (sign_at(m, false) == sa)
                    a = m;
                else
                    b = m;
            }
            roots.push_back({0.5 * (a + b), sa ? a : b, sa ? b : a, sa});
        }
        prev = cur;
        prev_alpha = alpha;
    }
    return roots;
}

// True when the improper-optimality threshold at rt is set by a_P, i.e. the
// improper solution degenerates continuously into the proper one (kappa_max
// tends to 0 as q(0) tends to P2).
inline bool crossing_is_continuous(const ZicScenario &s, const RateTarget &rt)
{
    const auto t = compute_thresholds(s, rt);
    return t.a_p >= t.nu && t.a_p >= t.iota;
}

} // namespace detail

/// Analytic locations of the jumps of the optimal parameters along the
/// boundary.
///
/// RegionTransition: recorded at 2 P1 = gamma_2rbar whenever P2 > P1 / a12;
/// the tolerable interference power drops from P2 to P1 / a12 there.
/// ThresholdCrossing: a12 crosses max(iota, rho) where that maximum is not
/// a_P, so (p2, kappa2) jump while r2 stays continuous. Crossings of a_P are
/// continuous (kappa_max -> 0) and are not recorded.
/// Records outside the r1 range covered by the boundary points are dropped.
inline std::vector<Discontinuity> detect_discontinuities(const ParetoBoundary &boundary, const ZicScenario &s)
{
    std::vector<Discontinuity> out;
    if (s.a12 == 0.0)
        return out;
    const double alpha0 = transition_alpha(s);
    const auto rt0 = RateTarget::from_alpha(s, alpha0);
    const double r1_border = 0.5 * std::log2(1.0 + 2.0 * s.p1_budget);
    const bool region_jump = s.p2_budget > s.p1_budget / s.a12;

    if (region_jump) {
        const auto left = solve_point(s, rt0);
        const auto right = detail::right_limit_at_border(s, rt0);
        out.push_back(detail::make_discontinuity(DiscontinuityKind::RegionTransition, alpha0, r1_border, left, right));
    }

    for (const auto &[lo, hi, border] : {std::tuple{0.0, alpha0, false}, std::tuple{alpha0, 1.0, true}}) {
        for (const auto &c : detail::margin_sign_changes(s, std::max(lo, 1e-12), hi, border)) {
            const auto rt = RateTarget::from_alpha(s, c.alpha);
            if (detail::crossing_is_continuous(s, rt))
                continue;
            const auto improper = detail::improper_solution(s, RateTarget::from_alpha(s, c.improper_side));
            const auto proper = detail::proper_solution(s, RateTarget::from_alpha(s, c.proper_side));
            const auto &left = c.improper_on_left ? improper : proper;
            const auto &right = c.improper_on_left ? proper : improper;
            out.push_back(detail::make_discontinuity(DiscontinuityKind::ThresholdCrossing, c.alpha,
                                                     std::max(improper.r1, proper.r1), left, right));
        }
    }

    if (!region_jump) {
        // a switch of scheme exactly at the border, caused by the jump of iota
        const bool left_improper = detail::improper_optimal_at(s, rt0, false);
        const bool right_improper = detail::improper_optimal_at(s, rt0, true);
        if (left_improper != right_improper) {
            const auto left = solve_point(s, rt0);
            const auto right = detail::right_limit_at_border(s, rt0);
            if (left.kappa2 != right.kappa2 || left.p2 != right.p2)
                out.push_back(
                    detail::make_discontinuity(DiscontinuityKind::ThresholdCrossing, alpha0, r1_border, left, right));
        }
    }

    if (!boundary.points.empty()) {
        double lo = boundary.points.front().r1, hi = lo;
        for (const auto &p : boundary.points) {
            lo = std::min(lo, p.r1);
            hi = std::max(hi, p.r1);
        }
        std::erase_if(out, [&](const Discontinuity &d) { return d.r1_location < lo - 1e-9 || d.r1_location > hi + 1e-9; });
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.alpha < b.alpha; });
    return out;
}

/// Alpha at which the decay of r2 along the boundary changes character:
/// the border itself when P2 >= P1 / a12, otherwise the interference-limited
/// alpha with q(1) = P2.
inline std::optional<double> bend_alpha(const ZicScenario &s)
{
    if (s.a12 == 0.0)
        return std::nullopt;
    const double alpha0 = transition_alpha(s);
    if (s.p2_budget >= s.p1_budget / s.a12)
        return alpha0;
    auto excess = [&](double alpha) {
        return power_cap(s, RateTarget::from_alpha(s, alpha), 1.0).q_value - s.p2_budget;
    };
    double lo = alpha0 + 1e-12 * (1.0 - alpha0), hi = 1.0;
    if (!(excess(lo) < 0.0 || excess(hi) > 0.0)) {
        while (hi - lo > 1e-12) {
            const double m = 0.5 * (lo + hi);
            if (excess(m) > 0.0)
                lo = m;
            else
                hi = m;
        }
        return 0.5 * (lo + hi);
    }
    return std::nullopt;
}

struct SweepOptions
{
    AlphaSpacing spacing = AlphaSpacing::UniformAlpha;
    bool include_transition = true; // add the border alpha to the sample set
    unsigned threads = 0;           // 0: default_thread_count()
};

/// Sample alphas for a sweep of n_points (plus the border alpha when
/// requested and not already present).
inline std::vector<double> sweep_alphas(const ZicScenario &s, std::size_t n_points, const SweepOptions &opt)
{
    if (n_points < 2)
        throw std::invalid_argument("sweep_boundary: n_points must be at least 2");
    std::vector<double> alphas(n_points);
    const double r_max = std::log2(1.0 + s.p1_budget);
    const double r_corner = std::log2(1.0 + s.p1_budget / (1.0 + s.p2_budget * s.a12));
    for (std::size_t i = 0; i < n_points; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(n_points - 1);
        if (opt.spacing == AlphaSpacing::UniformAlpha)
            alphas[i] = u;
        else
            alphas[i] = std::min((r_corner + u * (r_max - r_corner)) / r_max, 1.0);
    }
    if (opt.include_transition && s.a12 > 0.0) {
        const double alpha0 = transition_alpha(s);
        const auto rt0 = RateTarget::from_alpha(s, alpha0);
        const bool present = std::any_of(alphas.begin(), alphas.end(), [&](double a) {
            return at_region_transition(s, RateTarget::from_alpha(s, a));
        });
        if (!present && alpha0 >= alphas.front() && rt0.r_bar >= r_corner)
            alphas.insert(std::upper_bound(alphas.begin(), alphas.end(), alpha0), alpha0);
    }
    return alphas;
}

/// Full boundary: per-alpha optimal points, analytic discontinuities, the
/// time-sharing hull and the bend marker.
inline ParetoBoundary sweep_boundary(const ZicScenario &s, std::size_t n_points, const SweepOptions &opt = {})
{
    s.validate();
    ParetoBoundary b;
    b.scenario = s;
    const auto alphas = sweep_alphas(s, n_points, opt);
    b.points.resize(alphas.size());
    parallel_chunks(alphas.size(), opt.threads, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t i = begin; i < end; ++i)
            b.points[i] = solve_point(s, alphas[i]);
    });
    std::stable_sort(b.points.begin(), b.points.end(),
                     [](const BoundaryPoint &x, const BoundaryPoint &y) { return x.r1 < y.r1; });

    b.discontinuities = detect_discontinuities(b, s);

    std::vector<RatePair> pts;
    pts.reserve(b.points.size() + 2);
    pts.push_back({std::log2(1.0 + s.p1_budget / (1.0 + s.p2_budget * s.a12)), std::log2(1.0 + s.p2_budget)});
    pts.push_back({std::log2(1.0 + s.p1_budget), 0.0});
    for (const auto &p : b.points)
        pts.push_back({p.r1, p.r2});
    b.convex_hull = upper_hull(std::move(pts));
    b.bend_alpha = bend_alpha(s);
    return b;
}

inline ParetoBoundary sweep_boundary(const ZicScenario &s, std::size_t n_points, AlphaSpacing spacing)
{
    SweepOptions opt;
    opt.spacing = spacing;
    return sweep_boundary(s, n_points, opt);
}

/// Number of boundary points (with p2 > 0) where both users are maximally
/// improper; at most one by construction.
inline std::size_t max_improper_count(const ParetoBoundary &boundary)
{
    return static_cast<std::size_t>(std::count_if(boundary.points.begin(), boundary.points.end(), [](const auto &p) {
        return p.p2 > 0.0 && p.kappa1 >= 1.0 - 1e-12 && p.kappa2 >= 1.0 - 1e-12;
    }));
}

} // namespace zic
