// SPDX-License-Identifier: Apache-2.0
//
// risuav - throughput analysis of RIS-assisted UAV links
// Copyright (C) 2026 The risuav authors
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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "risuav/error.hpp"
#include "risuav/scenario.hpp"
#include "risuav/sweep.hpp"

using namespace risuav;
using namespace risuav::cli;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace
{
Scenario parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_scenario(in, "test.ini");
}

std::string parse_error(const std::string& text)
{
    try
    {
        (void)parse(text);
    }
    catch (const ConfigError& e)
    {
        return e.what();
    }
    return "";
}
} // namespace

TEST_CASE("empty input gives the defaults")
{
    const auto s = parse("");
    CHECK(s.nakagami_m == 2.0);
    CHECK(s.rice_k_db == 5.0);
    CHECK(s.ris_elements == 16);
    CHECK(s.geometry.L2 == 5.0);
    CHECK(s.link.gamma_db == -5.0);
    CHECK(s.misalignment);
    CHECK_FALSE(s.path_loss);
}

TEST_CASE("a full scenario file")
{
    const auto s = parse(R"(
# comment line
[fading]
nakagami_m = 3.5
rice_k_db = 7   ; trailing comment
mg_terms = 30
[ris]
elements = 32
[geometry]
l2_m = 50
alpha_m = 18
misalignment = false
[link]
gamma_db = 2.5
kappa_t = 0.05
kappa_r = 0.1
[run]
r_th = 3
trials = 5000
seed = 42
sampler = mg
[sweep]
param = kappa
start = 0
stop = 0.2
points = 5
)");
    CHECK(s.nakagami_m == 3.5);
    CHECK(s.rice_k_db == 7.0);
    CHECK(s.mg_terms == 30);
    CHECK(s.ris_elements == 32);
    CHECK(s.geometry.L2 == 50.0);
    CHECK(s.geometry.alpha == 18.0);
    CHECK_FALSE(s.misalignment);
    CHECK_FALSE(misalignment_stats(s));
    CHECK(s.link.gamma_db == 2.5);
    CHECK(s.link.kappa_r == 0.1);
    CHECK(s.r_th == 3.0);
    CHECK(s.trials == 5000);
    CHECK(s.seed == 42);
    CHECK(s.sampler == Sampler::MixtureGamma);
    CHECK(s.sweep.param == "kappa");
    CHECK(sweep_grid(s) == std::vector<double>{0.0, 0.05, 0.1, 0.15000000000000002, 0.2});
    CHECK(std::holds_alternative<fading::MixtureGammaModel>(sim_scenario(s).ru));
}

TEST_CASE("path-loss tuple sets the SNR")
{
    const auto s = parse("[link]\nl1_m = 10\np_s = 2500\n");
    REQUIRE(s.path_loss);
    // geometry L2 = 5 m gives spreading loss 1/50 and gamma = 2500/2500
    CHECK(std::abs(effective_budget(s).gamma_db) < 1e-12);
}

TEST_CASE("diagnostics name the file and line")
{
    CHECK_THAT(parse_error("[link]\n\ngamma_db = 1\nbogus = 2\n"),
               ContainsSubstring("test.ini:4:") && ContainsSubstring("bogus"));
    CHECK_THAT(parse_error("[nowhere]\n"), ContainsSubstring("test.ini:1:"));
    CHECK_THAT(parse_error("[run]\ntrials = 1\ntrials = 2\n"),
               ContainsSubstring("test.ini:3:") && ContainsSubstring("duplicate"));
    CHECK_THAT(parse_error("[run]\nr_th = fast\n"), ContainsSubstring("test.ini:2:"));
    CHECK_THAT(parse_error("[run]\nseed = -4\n"), ContainsSubstring("test.ini:2:"));
    CHECK_THAT(parse_error("gamma_db = 1\n"), ContainsSubstring("outside"));
    CHECK_THAT(parse_error("[link]\ngamma_db = 1\nl1_m = 10\n"), ContainsSubstring("both"));
}

TEST_CASE("semantic validation")
{
    CHECK_FALSE(parse_error("[run]\ntrials = 0\n").empty());
    CHECK_FALSE(parse_error("[run]\nr_th = 0\n").empty());
    CHECK_FALSE(parse_error("[fading]\nmg_terms = 61\n").empty());
    CHECK_FALSE(parse_error("[fading]\nnakagami_m = 0.3\n").empty());
    CHECK_FALSE(parse_error("[geometry]\nf_hz = -1\n").empty());
    CHECK_FALSE(parse_error("[sweep]\nparam = weather\n").empty());
    CHECK_FALSE(parse_error("[run]\nsampler = fancy\n").empty());
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.ini"), ConfigError);
}

TEST_CASE("rate sweep grid stops just past the distortion ceiling")
{
    auto s = parse("[link]\nkappa_t = 0.1\nkappa_r = 0.1\n");
    const auto grid = sweep_grid(s);
    CHECK(grid.front() == 0.5);
    CHECK_THAT(grid.back(), WithinRel(std::log2(51.0) + 0.25, 1e-15));
    s.sweep.log_scale = true;
    s.sweep.start = 1.0;
    s.sweep.stop = 4.0;
    s.sweep.points = 3;
    CHECK(sweep_grid(s) == std::vector<double>{1.0, 2.0, 4.0});
}

TEST_CASE("sweep parameters map onto the scenario")
{
    const auto base = parse("");
    CHECK(with_parameter(base, "l2_m", 42.0).geometry.L2 == 42.0);
    const auto k = with_parameter(base, "kappa", 0.07);
    CHECK(k.link.kappa_t == 0.07);
    CHECK(k.link.kappa_r == 0.07);
    CHECK_THROWS_AS(with_parameter(base, "rth", -1.0), ConfigError);
}

TEST_CASE("number formatting round-trips")
{
    for (double x : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300})
        CHECK(std::stod(format_number(x)) == x);
    CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("CSV round trip")
{
    SweepResult r;
    r.param = "rth";
    r.rows = {{0.5, 0.49, 0.48, 0.01}, {1.0, 0.98, std::nullopt, std::nullopt}, {1.5, std::nan(""), 1.2, 0.02}};
    std::ostringstream first;
    write_csv(first, r);
    CHECK(first.str().rfind("param,analytic,mc,mc_stderr\n", 0) == 0);
    std::istringstream in(first.str());
    const auto back = read_csv(in, "r.csv");
    std::ostringstream second;
    write_csv(second, back);
    CHECK(second.str() == first.str());
}

TEST_CASE("CSV reader rejects malformed input")
{
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return read_csv(in, "bad.csv");
    };
    CHECK_THROWS_AS(read(""), ConfigError);
    CHECK_THROWS_AS(read("x,y\n1,2\n"), ConfigError);
    CHECK_THROWS_AS(read("param,analytic\n"), ConfigError);
    CHECK_THROWS_AS(read("param,analytic\n1,2,3\n"), ConfigError);
    CHECK_THROWS_AS(read("param,analytic\n1,abc\n"), ConfigError);
    CHECK_THROWS_AS(read("param,analytic\n2,1\n1,1\n"), ConfigError);
    CHECK_NOTHROW(read("param,analytic\n1,0.5\n2,0.7\n"));
}

TEST_CASE("SVG output is well formed and deterministic")
{
    SweepResult r;
    r.param = "rth";
    r.rows = {{1.0, 0.9, 0.91, 0.01}, {2.0, 1.7, 1.69, 0.02}, {3.0, 2.1, std::nullopt, std::nullopt}};
    std::ostringstream a;
    std::ostringstream b;
    write_svg(a, r);
    write_svg(b, r);
    CHECK(a.str() == b.str());
    const std::string svg = a.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    CHECK(svg.find("<path") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
}
