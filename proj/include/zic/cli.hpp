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

#include "zic/io.hpp"
#include "zic/oracle.hpp"
#include "zic/random.hpp"
#include "zic/solver.hpp"
#include "zic/thresholds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zic {

enum class OutputFormat { Csv, Json };

/// Everything a subcommand needs. Values come from defaults, then an
/// optional config file, then command-line flags.
struct ScenarioConfig
{
    ZicScenario scenario{10.0, 10.0, 2.0};
    bool scenario_given = false; // any of p1 / p2 / a12 set explicitly
    std::size_t n_points = 2000;
    AlphaSpacing spacing = AlphaSpacing::UniformAlpha;
    std::optional<double> alpha;
    GridSpec grid{401, 401, 501, 360, 0};
    McSpec mc{200'000, 0x5eed, 0};
    std::size_t trials = 0;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;
};

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInvalidConfig = 2, kExitUnwritable = 3 };

/// Raised for configuration errors that map to exit code 2.
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::size_t parse_count(const std::string &key, const std::string &text)
{
    double v = 0.0;
    try {
        v = parse_double(text);
    } catch (const std::invalid_argument &) {
        throw ConfigError(key + ": not a number: " + text);
    }
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e15)
        throw ConfigError(key + ": expected a non-negative integer, got " + text);
    return static_cast<std::size_t>(v);
}

inline std::pair<std::size_t, std::size_t> parse_grid(const std::string &text)
{
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos)
        throw ConfigError("grid: expected AxB, got " + text);
    return {parse_count("grid", text.substr(0, x)), parse_count("grid", text.substr(x + 1))};
}

/// Applies one key/value setting. Keys mirror the long flag names.
inline void apply_setting(ScenarioConfig &cfg, const std::string &key, const std::string &value)
{
    auto number = [&]() {
        try {
            return parse_double(value);
        } catch (const std::invalid_argument &) {
            throw ConfigError(key + ": not a number: " + value);
        }
    };
    if (key == "p1") {
        cfg.scenario.p1_budget = number();
        cfg.scenario_given = true;
    } else if (key == "p2") {
        cfg.scenario.p2_budget = number();
        cfg.scenario_given = true;
    } else if (key == "a12") {
        cfg.scenario.a12 = number();
        cfg.scenario_given = true;
    } else if (key == "alpha") {
        cfg.alpha = number();
    } else if (key == "n") {
        cfg.n_points = parse_count(key, value);
    } else if (key == "spacing") {
        if (value == "alpha")
            cfg.spacing = AlphaSpacing::UniformAlpha;
        else if (value == "r1")
            cfg.spacing = AlphaSpacing::UniformR1;
        else
            throw ConfigError("spacing: expected alpha or r1, got " + value);
    } else if (key == "format") {
        if (value == "csv")
            cfg.format = OutputFormat::Csv;
        else if (value == "json")
            cfg.format = OutputFormat::Json;
        else
            throw ConfigError("format: expected csv or json, got " + value);
    } else if (key == "out") {
        cfg.out_path = value;
    } else if (key == "seed") {
        const auto v = parse_count(key, value);
        cfg.mc.seed = v;
    } else if (key == "grid") {
        const auto [a, b] = parse_grid(value);
        cfg.grid.p2_points = a;
        cfg.grid.kappa2_points = b;
    } else if (key == "mc-samples" || key == "mc_samples") {
        cfg.mc.n_samples = parse_count(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_count(key, value);
    } else {
        throw ConfigError("unknown setting: " + key);
    }
}

inline std::string json_scalar_text(const nlohmann::json &v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_unsigned())
        return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    if (v.is_number_float())
        return format_double(v.get<double>());
    throw ConfigError("config values must be numbers or strings");
}

} // namespace detail

/// Reads a config file into cfg. JSON documents are recognised by a leading
/// '{'; anything else is parsed as key=value lines with '#' comments.
inline void load_config(ScenarioConfig &cfg, std::istream &in)
{
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const auto body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error &e) {
            throw ConfigError(std::string("config: invalid JSON: ") + e.what());
        }
        for (auto it = j.begin(); it != j.end(); ++it)
            detail::apply_setting(cfg, it.key(), detail::json_scalar_text(it.value()));
        return;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        detail::apply_setting(cfg, detail::trim(line.substr(0, eq)), detail::trim(line.substr(eq + 1)));
    }
}

/// Deterministic pseudo-random scenario for verification trials: P1 and P2
/// log-uniform in [0.5, 100], a12 log-uniform in [0.01, 10], alpha uniform
/// in (0, 1).
inline std::pair<ZicScenario, double> random_scenario(std::uint64_t seed, std::uint64_t index)
{
    const Philox4x32 rng(seed);
    const auto u = rng.uniform_pair(index, 100);
    const auto v = rng.uniform_pair(index, 101);
    auto log_uniform = [](double x, double lo, double hi) { return lo * std::pow(hi / lo, x); };
    ZicScenario s{log_uniform(u[0], 0.5, 100.0), log_uniform(u[1], 0.5, 100.0), log_uniform(v[0], 0.01, 10.0)};
    return {s, v[1]};
}

// ------------------------------------------------------------- subcommands

inline int cmd_boundary(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err)
{
    SweepOptions opt;
    opt.spacing = cfg.spacing;
    const auto b = sweep_boundary(cfg.scenario, cfg.n_points, opt);

    if (cfg.out_path.empty()) {
        if (cfg.format == OutputFormat::Json) {
            out << to_json(b).dump(2) << '\n';
        } else {
            write_points_csv(b, out);
            out << '\n';
            write_discontinuities_csv(b, out);
            out << '\n';
            write_hull_csv(b, out);
        }
        return kExitOk;
    }

    auto open = [&](const std::string &path) -> std::optional<std::ofstream> {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) {
            err << "error: cannot write " << path << '\n';
            return std::nullopt;
        }
        return f;
    };
    auto main_file = open(cfg.out_path);
    if (!main_file)
        return kExitUnwritable;
    if (cfg.format == OutputFormat::Json) {
        *main_file << to_json(b).dump(2) << '\n';
    } else {
        write_points_csv(b, *main_file);
        auto disc = open(cfg.out_path + ".discontinuities.csv");
        auto hull = open(cfg.out_path + ".hull.csv");
        if (!disc || !hull)
            return kExitUnwritable;
        write_discontinuities_csv(b, *disc);
        write_hull_csv(b, *hull);
        if (!*disc || !*hull)
            return kExitUnwritable;
    }
    if (!*main_file) {
        err << "error: write to " << cfg.out_path << " failed\n";
        return kExitUnwritable;
    }
    err << "wrote " << b.points.size() << " points, " << b.discontinuities.size() << " discontinuities to "
        << cfg.out_path << '\n';
    return kExitOk;
}

inline int cmd_thresholds(const ScenarioConfig &cfg, std::ostream &out, std::ostream &)
{
    if (!cfg.alpha)
        throw ConfigError("thresholds: --alpha is required");
    const auto rt = RateTarget::from_alpha(cfg.scenario, *cfg.alpha);
    const auto t = compute_thresholds(cfg.scenario, rt);
    const auto region = classify_region(cfg.scenario, rt);
    if (cfg.format == OutputFormat::Json) {
        auto j = to_json(t, *cfg.alpha);
        j["schema"] = kSchemaTag;
        j["r_bar"] = rt.r_bar;
        j["region"] = to_string(region);
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "alpha=" << format_double(*cfg.alpha) << '\n'
        << "r_bar=" << format_double(rt.r_bar) << '\n'
        << "region=" << to_string(region) << '\n'
        << "mu=" << format_double(t.mu) << '\n'
        << "iota=" << format_double(t.iota) << '\n'
        << "rho=" << format_double(t.rho) << '\n'
        << "nu=" << format_double(t.nu) << '\n'
        << "eta=" << format_double(t.eta) << '\n'
        << "a_p=" << format_double(t.a_p) << '\n'
        << "a_i=" << format_double(t.a_i) << '\n'
        << "improper_optimal=" << (t.improper_optimal ? "true" : "false") << '\n'
        << "vacuous_constraint=" << (t.vacuous ? "true" : "false") << '\n';
    return kExitOk;
}

inline int cmd_regime(const ScenarioConfig &cfg, std::ostream &out, std::ostream &)
{
    const auto &s = cfg.scenario;
    const auto regime = classify_regime(s);
    const double upper = strictly_improper_threshold(s);
    const auto lower = min_alpha_threshold(s);
    if (cfg.format == OutputFormat::Json) {
        out << nlohmann::json{{"schema", kSchemaTag},
                              {"regime", to_string(regime)},
                              {"strictly_improper_threshold", upper},
                              {"strictly_proper_threshold", lower.value},
                              {"strictly_proper_threshold_alpha", lower.alpha}}
                   .dump(2)
            << '\n';
        return kExitOk;
    }
    out << "regime=" << to_string(regime) << '\n'
        << "strictly_improper_threshold=" << format_double(upper) << '\n'
        << "strictly_proper_threshold=" << format_double(lower.value) << '\n'
        << "strictly_proper_threshold_alpha=" << format_double(lower.alpha) << '\n';
    return kExitOk;
}

/// Worst deviations seen by a verification run.
struct VerifyReport
{
    std::size_t cases = 0;
    double grid_bound = 0.0;       // max allowed |r2_closed - r2_grid|
    double grid_deviation = 0.0;   // max observed
    double user1_excess = 0.0;     // max of (grid R1 - closed-form R1)
    double mc_deviation = 0.0;     // max |R_hat - R_closed|
    bool passed = true;
};

inline constexpr double kMcTolerance = 0.02;
inline constexpr double kUser1Tolerance = 1e-9;

/// Checks one scenario at the given alphas against the grid oracle, the
/// user-1 grid and (for mc_points of them) the Monte Carlo estimator.
inline void verify_scenario(const ZicScenario &s, const std::vector<double> &alphas, std::size_t mc_points,
                            const ScenarioConfig &cfg, VerifyReport &rep)
{
    const double bound = cfg.grid.resolution_bound(s.p2_budget);
    rep.grid_bound = std::max(rep.grid_bound, bound);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto rt = RateTarget::from_alpha(s, alphas[i]);
        const auto pt = solve_point(s, rt);
        const auto g = grid_solve(s, rt, cfg.grid);
        const double dev = std::abs(pt.r2 - g.r2_best);
        rep.grid_deviation = std::max(rep.grid_deviation, dev);
        if (!(dev <= bound))
            rep.passed = false;

        const auto u1 = grid_validate_user1(s, pt.p2, pt.kappa2, cfg.grid);
        const double excess = u1.r1_best - rate1_reduced(s, pt.p2, pt.kappa2);
        rep.user1_excess = std::max(rep.user1_excess, excess);
        if (excess > kUser1Tolerance)
            rep.passed = false;

        if (i < mc_points) {
            const TransmitParams t2{pt.p2, pt.kappa2, 0.0};
            const auto t1 = optimal_kappa1_phi1(s, t2);
            const auto [r1, r2] = rate_pair_general(s, t1, t2);
            McSpec mc = cfg.mc;
            mc.seed = cfg.mc.seed + rep.cases;
            const auto est = mc_rate_estimate(s, t1, t2, mc);
            const double mdev = std::max(std::abs(est.r1_hat - r1), std::abs(est.r2_hat - r2));
            rep.mc_deviation = std::max(rep.mc_deviation, mdev);
            if (!(mdev <= kMcTolerance))
                rep.passed = false;
        }
        ++rep.cases;
    }
}

inline int cmd_verify(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err)
{
    cfg.grid.validate();
    cfg.mc.validate();
    VerifyReport rep;
    const std::vector<double> alphas{0.0, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9, 1.0};
    if (cfg.trials > 0) {
        for (std::size_t k = 0; k < cfg.trials; ++k) {
            const auto [s, alpha] = random_scenario(cfg.mc.seed, k);
            verify_scenario(s, {alpha}, 1, cfg, rep);
        }
    } else if (cfg.scenario_given) {
        verify_scenario(cfg.scenario, alphas, 3, cfg, rep);
    } else {
        verify_scenario({10.0, 10.0, 2.0}, alphas, 3, cfg, rep);
        verify_scenario({10.0, 10.0, 0.8}, alphas, 3, cfg, rep);
    }
    const auto show = [](double v) {
        std::ostringstream os;
        os << std::setprecision(6) << v;
        return os.str();
    };
    out << "cases=" << rep.cases << '\n'
        << "grid=" << cfg.grid.p2_points << 'x' << cfg.grid.kappa2_points << '\n'
        << "grid_bound=" << show(rep.grid_bound) << '\n'
        << "grid_max_deviation=" << show(rep.grid_deviation) << '\n'
        << "user1_max_excess=" << show(rep.user1_excess) << " (bound " << show(kUser1Tolerance) << ")\n"
        << "mc_samples=" << cfg.mc.n_samples << '\n'
        << "mc_max_deviation=" << show(rep.mc_deviation) << " (bound " << show(kMcTolerance) << ")\n"
        << "result=" << (rep.passed ? "pass" : "fail") << '\n';
    if (!rep.passed)
        err << "verification failed\n";
    return rep.passed ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------ driver

/// Parses argv and dispatches. Data goes to out (or --out), diagnostics to
/// err; the return value is the process exit code.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Closed-form Pareto boundary of the Z interference channel with improper signaling",
                 "zic_pareto"};
    app.require_subcommand(1);

    std::optional<std::string> p1, p2, a12, alpha, n, spacing, format, out_path, seed, grid, mc_samples, trials;
    std::string config_path;
    app.add_option("--p1", p1, "power budget of user 1 (linear)");
    app.add_option("--p2", p2, "power budget of user 2 (linear)");
    app.add_option("--a12", a12, "cross-link gain from user 2 to receiver 1");
    app.add_option("--alpha", alpha, "rate fraction demanded by user 1, in [0, 1]");
    app.add_option("--n", n, "number of sweep points");
    app.add_option("--spacing", spacing, "sweep spacing: alpha or r1");
    app.add_option("--format", format, "output format: csv or json");
    app.add_option("--out", out_path, "output path (default: stdout)");
    app.add_option("--seed", seed, "seed for Monte Carlo and random trials");
    app.add_option("--grid", grid, "oracle grid as AxB (p2 points x kappa2 points)");
    app.add_option("--mc-samples", mc_samples, "Monte Carlo sample count");
    app.add_option("--trials", trials, "number of randomized verification scenarios");
    app.add_option("--config", config_path, "config file (key=value lines or JSON)");

    auto *boundary = app.add_subcommand("boundary", "sweep the Pareto boundary")->fallthrough();
    auto *thresholds = app.add_subcommand("thresholds", "channel-gain thresholds at one alpha")->fallthrough();
    auto *verify = app.add_subcommand("verify", "check closed forms against the oracles")->fallthrough();
    auto *regime = app.add_subcommand("regime", "operation regime of the scenario")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }

    try {
        ScenarioConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw ConfigError("cannot read config file " + config_path);
            load_config(cfg, in);
        }
        const std::pair<const char *, const std::optional<std::string> *> flags[] = {
            {"p1", &p1},       {"p2", &p2},         {"a12", &a12},     {"alpha", &alpha},
            {"n", &n},         {"spacing", &spacing}, {"format", &format}, {"out", &out_path},
            {"seed", &seed},   {"grid", &grid},     {"mc-samples", &mc_samples}, {"trials", &trials}};
        for (const auto &[key, value] : flags)
            if (*value)
                detail::apply_setting(cfg, key, **value);
        cfg.scenario.validate();

        if (boundary->parsed())
            return cmd_boundary(cfg, out, err);
        if (thresholds->parsed())
            return cmd_thresholds(cfg, out, err);
        if (verify->parsed())
            return cmd_verify(cfg, out, err);
        if (regime->parsed())
            return cmd_regime(cfg, out, err);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
    return kExitInvalidConfig;
}

} // namespace zic
