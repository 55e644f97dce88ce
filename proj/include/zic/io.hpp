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

#include "zic/solver.hpp"
#include "zic/thresholds.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace zic {

inline constexpr std::string_view kSchemaTag = "zic-pareto/1";

/// Shortest decimal representation that parses back to the same double.
inline std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

template <class Enum, std::size_t N>
Enum enum_from_string(std::string_view text, const Enum (&values)[N])
{
    for (Enum e : values)
        if (to_string(e) == text)
            return e;
    throw std::invalid_argument("unknown label: '" + std::string(text) + "'");
}

inline SolutionBranch parse_branch(std::string_view t)
{
    constexpr SolutionBranch all[] = {SolutionBranch::ProperOptimal, SolutionBranch::ImproperKappaMax,
                                      SolutionBranch::ImproperMaximal};
    return enum_from_string(t, all);
}

inline Region parse_region(std::string_view t)
{
    constexpr Region all[] = {Region::PowerLimited, Region::InterferenceLimited};
    return enum_from_string(t, all);
}

inline DiscontinuityKind parse_discontinuity_kind(std::string_view t)
{
    constexpr DiscontinuityKind all[] = {DiscontinuityKind::RegionTransition, DiscontinuityKind::ThresholdCrossing};
    return enum_from_string(t, all);
}

// ---------------------------------------------------------------------- CSV

inline constexpr std::string_view kPointsHeader = "alpha,r1,r2_improper,r2_proper,p2,kappa2,kappa1,branch,region";
inline constexpr std::string_view kDiscontinuityHeader =
    "alpha,r1_location,r2_left,r2_right,p2_left,p2_right,kappa2_left,kappa2_right,kind";
inline constexpr std::string_view kHullHeader = "r1,r2";

namespace detail {

inline std::vector<std::string_view> split_csv(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

inline std::string scenario_comment(const ZicScenario &s)
{
    return "#" + std::string(kSchemaTag) + " p1=" + format_double(s.p1_budget) + " p2=" +
           format_double(s.p2_budget) + " a12=" + format_double(s.a12);
}

inline ZicScenario parse_scenario_comment(std::string_view line)
{
    ZicScenario s;
    const auto tag = "#" + std::string(kSchemaTag);
    if (line.substr(0, tag.size()) != tag)
        throw std::invalid_argument("missing schema tag " + std::string(kSchemaTag));
    std::istringstream in{std::string(line.substr(tag.size()))};
    std::string kv;
    while (in >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            continue;
        const auto key = kv.substr(0, eq);
        const double v = parse_double(std::string_view(kv).substr(eq + 1));
        if (key == "p1")
            s.p1_budget = v;
        else if (key == "p2")
            s.p2_budget = v;
        else if (key == "a12")
            s.a12 = v;
    }
    return s;
}

inline BoundaryPoint point_from_row(const ZicScenario &s, const std::vector<std::string_view> &f)
{
    if (f.size() != 9)
        throw std::invalid_argument("boundary row: expected 9 fields");
    BoundaryPoint p;
    p.alpha = parse_double(f[0]);
    p.r1 = parse_double(f[1]);
    p.r2 = parse_double(f[2]);
    p.r2_proper = parse_double(f[3]);
    p.p2 = parse_double(f[4]);
    p.kappa2 = parse_double(f[5]);
    p.kappa1 = parse_double(f[6]);
    p.branch = parse_branch(f[7]);
    p.region = parse_region(f[8]);
    p.r_bar = RateTarget::from_alpha(s, p.alpha).r_bar;
    p.phase_delta = p.p2 * p.kappa2 > 0.0 ? std::numbers::pi : 0.0;
    return p;
}

inline Discontinuity discontinuity_from_row(const std::vector<std::string_view> &f)
{
    if (f.size() != 9)
        throw std::invalid_argument("discontinuity row: expected 9 fields");
    Discontinuity d;
    d.alpha = parse_double(f[0]);
    d.r1_location = parse_double(f[1]);
    d.r2_left = parse_double(f[2]);
    d.r2_right = parse_double(f[3]);
    d.p2_left = parse_double(f[4]);
    d.p2_right = parse_double(f[5]);
    d.kappa2_left = parse_double(f[6]);
    d.kappa2_right = parse_double(f[7]);
    d.kind = parse_discontinuity_kind(f[8]);
    return d;
}

} // namespace detail

inline void write_points_csv(const ParetoBoundary &b, std::ostream &out)
{
    out << detail::scenario_comment(b.scenario) << '\n' << kPointsHeader << '\n';
    for (const auto &p : b.points)
        out << format_double(p.alpha) << ',' << format_double(p.r1) << ',' << format_double(p.r2) << ','
            << format_double(p.r2_proper) << ',' << format_double(p.p2) << ',' << format_double(p.kappa2) << ','
            << format_double(p.kappa1) << ',' << to_string(p.branch) << ',' << to_string(p.region) << '\n';
}

inline void write_discontinuities_csv(const ParetoBoundary &b, std::ostream &out)
{
    out << detail::scenario_comment(b.scenario) << '\n' << kDiscontinuityHeader << '\n';
    for (const auto &d : b.discontinuities)
        out << format_double(d.alpha) << ',' << format_double(d.r1_location) << ',' << format_double(d.r2_left)
            << ',' << format_double(d.r2_right) << ',' << format_double(d.p2_left) << ','
            << format_double(d.p2_right) << ',' << format_double(d.kappa2_left) << ','
            << format_double(d.kappa2_right) << ',' << to_string(d.kind) << '\n';
}

inline void write_hull_csv(const ParetoBoundary &b, std::ostream &out)
{
    out << detail::scenario_comment(b.scenario);
    if (b.bend_alpha)
        out << " bend_alpha=" << format_double(*b.bend_alpha);
    out << '\n' << kHullHeader << '\n';
    for (const auto &v : b.convex_hull)
        out << format_double(v.r1) << ',' << format_double(v.r2) << '\n';
}

/// Reads back the three CSV tables written by write_points_csv,
/// write_discontinuities_csv and write_hull_csv.
inline ParetoBoundary read_boundary_csv(std::istream &points, std::istream &discontinuities, std::istream &hull)
{
    ParetoBoundary b;
    auto read_table = [](std::istream &in, std::string_view header, auto &&on_meta, auto &&on_row) {
        std::string line;
        bool saw_header = false;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            if (line.front() == '#') {
                on_meta(line);
                continue;
            }
            if (!saw_header) {
                if (line != header)
                    throw std::invalid_argument("unexpected CSV header: " + line);
                saw_header = true;
                continue;
            }
            on_row(detail::split_csv(line));
        }
        if (!saw_header)
            throw std::invalid_argument("CSV table without header");
    };
    bool have_scenario = false;
    auto meta = [&](const std::string &line) {
        if (!have_scenario) {
            b.scenario = detail::parse_scenario_comment(line);
            have_scenario = true;
        }
        const auto pos = line.find(" bend_alpha=");
        if (pos != std::string::npos)
            b.bend_alpha = parse_double(std::string_view(line).substr(pos + 12));
    };
    read_table(points, kPointsHeader, meta, [&](const auto &f) { b.points.push_back(detail::point_from_row(b.scenario, f)); });
    read_table(discontinuities, kDiscontinuityHeader, meta,
               [&](const auto &f) { b.discontinuities.push_back(detail::discontinuity_from_row(f)); });
    read_table(hull, kHullHeader, meta, [&](const auto &f) {
        if (f.size() != 2)
            throw std::invalid_argument("hull row: expected 2 fields");
        b.convex_hull.push_back({parse_double(f[0]), parse_double(f[1])});
    });
    return b;
}

// --------------------------------------------------------------------- JSON

inline nlohmann::json json_number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

inline double json_to_double(const nlohmann::json &j)
{
    if (j.is_string())
        return parse_double(j.get<std::string>());
    return j.get<double>();
}

inline nlohmann::json to_json(const ParetoBoundary &b)
{
    using nlohmann::json;
    json j;
    j["schema"] = kSchemaTag;
    j["scenario"] = {{"p1", b.scenario.p1_budget}, {"p2", b.scenario.p2_budget}, {"a12", b.scenario.a12}};
    json pts = json::array();
    for (const auto &p : b.points)
        pts.push_back({{"alpha", p.alpha}, {"r1", p.r1}, {"r2_improper", p.r2}, {"r2_proper", p.r2_proper},
                       {"p2", p.p2}, {"kappa2", p.kappa2}, {"kappa1", p.kappa1},
                       {"branch", to_string(p.branch)}, {"region", to_string(p.region)}});
    j["points"] = std::move(pts);
    json disc = json::array();
    for (const auto &d : b.discontinuities)
        disc.push_back({{"alpha", d.alpha}, {"r1_location", d.r1_location}, {"r2_left", d.r2_left},
                        {"r2_right", d.r2_right}, {"p2_left", d.p2_left}, {"p2_right", d.p2_right},
                        {"kappa2_left", d.kappa2_left}, {"kappa2_right", d.kappa2_right},
                        {"kind", to_string(d.kind)}});
    j["discontinuities"] = std::move(disc);
    json hull = json::array();
    for (const auto &v : b.convex_hull)
        hull.push_back({{"r1", v.r1}, {"r2", v.r2}});
    j["convex_hull"] = std::move(hull);
    j["bend_alpha"] = b.bend_alpha ? json(*b.bend_alpha) : json(nullptr);
    return j;
}

inline ParetoBoundary boundary_from_json(const nlohmann::json &j)
{
    if (j.at("schema").get<std::string>() != kSchemaTag)
        throw std::invalid_argument("unsupported schema");
    ParetoBoundary b;
    const auto &sc = j.at("scenario");
    b.scenario = {sc.at("p1").get<double>(), sc.at("p2").get<double>(), sc.at("a12").get<double>()};
    for (const auto &e : j.at("points")) {
        BoundaryPoint p;
        p.alpha = e.at("alpha").get<double>();
        p.r1 = e.at("r1").get<double>();
        p.r2 = e.at("r2_improper").get<double>();
        p.r2_proper = e.at("r2_proper").get<double>();
        p.p2 = e.at("p2").get<double>();
        p.kappa2 = e.at("kappa2").get<double>();
        p.kappa1 = e.at("kappa1").get<double>();
        p.branch = parse_branch(e.at("branch").get<std::string>());
        p.region = parse_region(e.at("region").get<std::string>());
        p.r_bar = RateTarget::from_alpha(b.scenario, p.alpha).r_bar;
        p.phase_delta = p.p2 * p.kappa2 > 0.0 ? std::numbers::pi : 0.0;
        b.points.push_back(p);
    }
    for (const auto &e : j.at("discontinuities")) {
        Discontinuity d;
        d.alpha = e.at("alpha").get<double>();
        d.r1_location = e.at("r1_location").get<double>();
        d.r2_left = e.at("r2_left").get<double>();
        d.r2_right = e.at("r2_right").get<double>();
        d.p2_left = e.at("p2_left").get<double>();
        d.p2_right = e.at("p2_right").get<double>();
        d.kappa2_left = e.at("kappa2_left").get<double>();
        d.kappa2_right = e.at("kappa2_right").get<double>();
        d.kind = parse_discontinuity_kind(e.at("kind").get<std::string>());
        b.discontinuities.push_back(d);
    }
    for (const auto &e : j.at("convex_hull"))
        b.convex_hull.push_back({e.at("r1").get<double>(), e.at("r2").get<double>()});
    if (j.contains("bend_alpha") && !j["bend_alpha"].is_null())
        b.bend_alpha = j["bend_alpha"].get<double>();
    return b;
}

inline nlohmann::json to_json(const ThresholdSet &t, double alpha)
{
    return {{"alpha", alpha},
            {"mu", json_number(t.mu)},
            {"iota", json_number(t.iota)},
            {"rho", json_number(t.rho)},
            {"nu", json_number(t.nu)},
            {"eta", json_number(t.eta)},
            {"a_p", json_number(t.a_p)},
            {"a_i", json_number(t.a_i)},
            {"improper_optimal", t.improper_optimal},
            {"vacuous_constraint", t.vacuous}};
}

} // namespace zic
