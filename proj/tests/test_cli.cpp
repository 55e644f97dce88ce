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

#include "zic/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace zic;

namespace {

struct Run
{
    int code = -1;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "zic_pareto");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string value_of(const std::string &text, const std::string &key)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0)
            return line.substr(key.size() + 1);
    return {};
}

std::filesystem::path temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "zic_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("thresholds subcommand", "[cli]")
{
    auto r = run({"thresholds", "--p1", "10", "--alpha", "0.7"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(value_of(r.out, "mu")) - 0.571676) < 1e-6);
    CHECK(std::abs(std::stod(value_of(r.out, "iota")) - 0.545) < 5e-4);

    r = run({"thresholds", "--alpha", "1", "--p1", "10"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(std::stod(value_of(r.out, "mu")) - 0.9091) < 1e-4);
    CHECK(std::abs(std::stod(value_of(r.out, "iota")) - 0.9091) < 1e-4);

    r = run({"thresholds", "--alpha", "0"});
    REQUIRE(r.code == 0);
    CHECK(value_of(r.out, "vacuous_constraint") == "true");
    CHECK(value_of(r.out, "rho") == "inf");

    r = run({"thresholds", "--alpha", "0.3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == "zic-pareto/1");
    CHECK(j.contains("improper_optimal"));

    CHECK(run({"thresholds", "--alpha", "1.5"}).code == 2);
    CHECK(run({"thresholds"}).code == 2);
}

TEST_CASE("regime subcommand", "[cli]")
{
    CHECK(value_of(run({"regime", "--p1", "10", "--p2", "10", "--a12", "2"}).out, "regime") == "strictly-improper");
    CHECK(value_of(run({"regime", "--a12", "0.8"}).out, "regime") == "selective");
    const auto r = run({"regime", "--a12", "0.01", "--p1", "10", "--p2", "10"});
    CHECK(value_of(r.out, "regime") == "strictly-proper");
    CHECK(std::stod(value_of(r.out, "strictly_improper_threshold")) == 10.0 / 11.0);
}

TEST_CASE("boundary subcommand", "[cli]")
{
    const auto dir = temp_dir();
    SECTION("csv with sidecars")
    {
        const auto path = (dir / "jump.csv").string();
        const auto r = run({"boundary", "--p1", "10", "--p2", "10", "--a12", "2", "--n", "2000", "--format", "csv",
                            "--out", path});
        REQUIRE(r.code == 0);
        std::ifstream pts(path), disc(path + ".discontinuities.csv"), hull(path + ".hull.csv");
        const auto b = read_boundary_csv(pts, disc, hull);
        CHECK(b.points.size() >= 2000);
        REQUIRE(b.discontinuities.size() == 1);
        CHECK(std::abs(b.discontinuities[0].r1_location - 2.196) < 1e-3);
    }
    SECTION("json to stdout")
    {
        const auto r = run({"boundary", "--a12", "0.8", "--n", "300", "--format", "json"});
        REQUIRE(r.code == 0);
        const auto b = boundary_from_json(nlohmann::json::parse(r.out));
        CHECK(b.points.size() >= 300);
        REQUIRE(b.discontinuities.size() == 1);
        CHECK(b.discontinuities[0].kind == DiscontinuityKind::ThresholdCrossing);
    }
    SECTION("no coupling")
    {
        const auto r = run({"boundary", "--a12", "0", "--n", "20"});
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        std::getline(in, line);
        int rows = 0;
        while (std::getline(in, line) && !line.empty()) {
            CHECK(line.substr(line.find(',') + 1, line.find(',', line.find(',') + 1) - line.find(',') - 1) ==
                  format_double(std::log2(11.0)));
            ++rows;
        }
        CHECK(rows == 20);
    }
    SECTION("errors")
    {
        CHECK(run({"boundary", "--p1", "-3"}).code == 2);
        CHECK(run({"boundary", "--spacing", "log"}).code == 2);
        CHECK(run({"boundary", "--n", "1"}).code == 2);
        CHECK(run({"boundary", "--bogus"}).code == 2);
        CHECK(run({"boundary", "--n", "10", "--out", "/nonexistent-dir/x.csv"}).code == 3);
        CHECK(run({}).code == 2);
    }
}

TEST_CASE("config files and flag precedence", "[cli]")
{
    const auto dir = temp_dir();
    const auto kv = (dir / "cfg.txt").string();
    std::ofstream(kv) << "# scenario\np1 = 10\np2=10\na12=0.01\n";
    CHECK(value_of(run({"regime", "--config", kv}).out, "regime") == "strictly-proper");
    CHECK(value_of(run({"regime", "--config", kv, "--a12", "2"}).out, "regime") == "strictly-improper");

    const auto js = (dir / "cfg.json").string();
    std::ofstream(js) << R"({"p1": 10, "a12": 0.8, "alpha": "0.7"})";
    CHECK(value_of(run({"regime", "--config", js}).out, "regime") == "selective");
    CHECK(run({"thresholds", "--config", js}).code == 0);

    const auto bad = (dir / "bad.txt").string();
    std::ofstream(bad) << "p1 10\n";
    CHECK(run({"regime", "--config", bad}).code == 2);
    std::ofstream(bad) << "colour=blue\n";
    CHECK(run({"regime", "--config", bad}).code == 2);
    CHECK(run({"regime", "--config", (dir / "missing.txt").string()}).code == 2);
}

TEST_CASE("verify subcommand", "[cli]")
{
    auto r = run({"verify", "--grid", "11x11"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "result") == "pass");
    CHECK(std::stod(value_of(r.out, "grid_bound")) == Catch::Approx(11.0));

    r = run({"verify", "--seed", "7", "--trials", "50", "--grid", "201x201"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "cases") == "50");

    // 0.02 is sized for large sample counts; with 20000 samples the
    // estimator noise exceeds it and verification reports failure
    r = run({"verify", "--grid", "11x11", "--mc-samples", "20000"});
    CHECK(r.code == 1);
    CHECK(value_of(r.out, "result") == "fail");

    CHECK(run({"verify", "--grid", "1x5"}).code == 2);
    CHECK(run({"verify", "--mc-samples", "10"}).code == 2);
}

TEST_CASE("installed executable reports exit codes", "[cli]")
{
    const std::string exe = ZIC_PARETO_EXE;
    CHECK(std::system((exe + " regime --a12 0.8 > /dev/null").c_str()) == 0);
    const int code = std::system((exe + " thresholds --alpha 2 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(code) == 2);
}
