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

#include "risuav/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>

#include "risuav/error.hpp"
#include "risuav/numeric.hpp"

namespace risuav::cli
{
namespace
{
std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Location
{
    const std::string& source;
    int line;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
    }
};

double to_double(const std::string& text, const Location& at)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        at.fail("expected a finite number, got '" + text + "'");
    return v;
}

std::uint64_t to_unsigned(const std::string& text, const Location& at)
{
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end)
        at.fail("expected a non-negative integer, got '" + text + "'");
    return v;
}

int to_int(const std::string& text, const Location& at)
{
    const std::uint64_t v = to_unsigned(text, at);
    if (v > 1000000000u)
        at.fail("integer out of range: " + text);
    return static_cast<int>(v);
}

bool to_bool(const std::string& text, const Location& at)
{
    if (text == "true" || text == "yes" || text == "on" || text == "1")
        return true;
    if (text == "false" || text == "no" || text == "off" || text == "0")
        return false;
    at.fail("expected true/false, got '" + text + "'");
}

using Setter = std::function<void(Scenario&, const std::string&, const Location&)>;

throughput::PathLoss& path_loss(Scenario& s)
{
    if (!s.path_loss)
        s.path_loss.emplace();
    return *s.path_loss;
}

const std::map<std::string, std::map<std::string, Setter>>& grammar()
{
    using S = Scenario;
    using L = Location;
    using T = std::string;
    static const std::map<std::string, std::map<std::string, Setter>> g{
        {"fading",
         {
             {"nakagami_m", [](S& s, const T& v, const L& at) { s.nakagami_m = to_double(v, at); }},
             {"rice_k_db", [](S& s, const T& v, const L& at) { s.rice_k_db = to_double(v, at); }},
             {"mg_terms", [](S& s, const T& v, const L& at) { s.mg_terms = to_int(v, at); }},
         }},
        {"ris",
         {
             {"elements", [](S& s, const T& v, const L& at) { s.ris_elements = to_int(v, at); }},
         }},
        {"geometry",
         {
             {"f_hz", [](S& s, const T& v, const L& at) { s.geometry.f = to_double(v, at); }},
             {"l2_m", [](S& s, const T& v, const L& at) { s.geometry.L2 = to_double(v, at); }},
             {"w0_m", [](S& s, const T& v, const L& at) { s.geometry.w_o = to_double(v, at); }},
             {"theta_rad", [](S& s, const T& v, const L& at) { s.geometry.theta = to_double(v, at); }},
             {"phi_rad", [](S& s, const T& v, const L& at) { s.geometry.phi = to_double(v, at); }},
             {"sigma_p_m", [](S& s, const T& v, const L& at) { s.geometry.sigma_p = to_double(v, at); }},
             {"sigma_o_rad", [](S& s, const T& v, const L& at) { s.geometry.sigma_o = to_double(v, at); }},
             {"dx_m", [](S& s, const T& v, const L& at) { s.geometry.d_x = to_double(v, at); }},
             {"alpha_m", [](S& s, const T& v, const L& at) { s.geometry.alpha = to_double(v, at); }},
             {"cn2", [](S& s, const T& v, const L& at) { s.geometry.Cn2 = to_double(v, at); }},
             {"misalignment", [](S& s, const T& v, const L& at) { s.misalignment = to_bool(v, at); }},
         }},
        {"link",
         {
             {"gamma_db", [](S& s, const T& v, const L& at) { s.link.gamma_db = to_double(v, at); }},
             {"kappa_t", [](S& s, const T& v, const L& at) { s.link.kappa_t = to_double(v, at); }},
             {"kappa_r", [](S& s, const T& v, const L& at) { s.link.kappa_r = to_double(v, at); }},
             {"l1", [](S& s, const T& v, const L& at) { path_loss(s).l1 = to_double(v, at); }},
             {"l2", [](S& s, const T& v, const L& at) { path_loss(s).l2 = to_double(v, at); }},
             {"n1", [](S& s, const T& v, const L& at) { path_loss(s).n1 = to_double(v, at); }},
             {"n2", [](S& s, const T& v, const L& at) { path_loss(s).n2 = to_double(v, at); }},
             {"l1_m", [](S& s, const T& v, const L& at) { path_loss(s).L1 = to_double(v, at); }},
             {"p_s", [](S& s, const T& v, const L& at) { path_loss(s).P_s = to_double(v, at); }},
             {"sigma_w2", [](S& s, const T& v, const L& at) { path_loss(s).sigma_w2 = to_double(v, at); }},
         }},
        {"run",
         {
             {"r_th", [](S& s, const T& v, const L& at) { s.r_th = to_double(v, at); }},
             {"trials", [](S& s, const T& v, const L& at) { s.trials = to_unsigned(v, at); }},
             {"seed", [](S& s, const T& v, const L& at) { s.seed = to_unsigned(v, at); }},
             {"threads", [](S& s, const T& v, const L& at) { s.threads = static_cast<unsigned>(to_int(v, at)); }},
             {"sampler",
              [](S& s, const T& v, const L& at) {
                  if (v == "exact")
                      s.sampler = Sampler::Exact;
                  else if (v == "mg")
                      s.sampler = Sampler::MixtureGamma;
                  else
                      at.fail("sampler must be 'exact' or 'mg'");
              }},
         }},
        {"sweep",
         {
             {"param", [](S& s, const T& v, const L&) { s.sweep.param = v; }},
             {"start", [](S& s, const T& v, const L& at) { s.sweep.start = to_double(v, at); }},
             {"stop", [](S& s, const T& v, const L& at) { s.sweep.stop = to_double(v, at); }},
             {"points", [](S& s, const T& v, const L& at) { s.sweep.points = to_int(v, at); }},
             {"scale",
              [](S& s, const T& v, const L& at) {
                  if (v != "linear" && v != "log")
                      at.fail("scale must be 'linear' or 'log'");
                  s.sweep.log_scale = v == "log";
              }},
         }},
        {"compare",
         {
             {"rth_start", [](S& s, const T& v, const L& at) { s.compare.rth_start = to_double(v, at); }},
             {"rth_stop", [](S& s, const T& v, const L& at) { s.compare.rth_stop = to_double(v, at); }},
             {"points", [](S& s, const T& v, const L& at) { s.compare.points = to_int(v, at); }},
             {"tolerance_abs", [](S& s, const T& v, const L& at) { s.compare.tolerance_abs = to_double(v, at); }},
             {"tolerance_rel", [](S& s, const T& v, const L& at) { s.compare.tolerance_rel = to_double(v, at); }},
         }},
    };
    return g;
}

void check(bool ok, const std::string& what)
{
    if (!ok)
        throw ConfigError("invalid scenario: " + what);
}
} // namespace

Scenario parse_scenario(std::istream& in, const std::string& source)
{
    Scenario s;
    const auto& g = grammar();
    const std::map<std::string, Setter>* section = nullptr;
    std::string section_name;
    std::set<std::string> seen;
    bool gamma_given = false;
    std::string line;
    int number = 0;
    while (std::getline(in, line))
    {
        ++number;
        const Location at{source, number};
        const auto comment = line.find_first_of("#;");
        const std::string text = trim(line.substr(0, comment));
        if (text.empty())
            continue;
        if (text.front() == '[')
        {
            if (text.back() != ']')
                at.fail("malformed section header '" + text + "'");
            section_name = trim(text.substr(1, text.size() - 2));
            const auto it = g.find(section_name);
            if (it == g.end())
                at.fail("unknown section [" + section_name + "]");
            section = &it->second;
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            at.fail("expected 'key = value', got '" + text + "'");
        if (!section)
            at.fail("key outside of any section");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        const auto it = section->find(key);
        if (it == section->end())
            at.fail("unknown key '" + key + "' in section [" + section_name + "]");
        if (!seen.insert(section_name + "." + key).second)
            at.fail("duplicate key '" + key + "' in section [" + section_name + "]");
        if (value.empty())
            at.fail("missing value for '" + key + "'");
        it->second(s, value, at);
        if (section_name == "link" && key == "gamma_db")
            gamma_given = true;
    }
    if (gamma_given && s.path_loss)
        throw ConfigError(source + ": [link] gives both gamma_db and a path-loss tuple");
    validate(s);
    return s;
}

Scenario load_scenario(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open scenario file '" + path + "'");
    return parse_scenario(in, path);
}

void validate(const Scenario& s)
{
    check(s.nakagami_m >= 0.5, "[fading] nakagami_m must be >= 0.5");
    check(std::isfinite(s.rice_k_db) && s.rice_k_db <= 40.0, "[fading] rice_k_db must be at most 40");
    check(s.mg_terms >= 1 && s.mg_terms <= 60, "[fading] mg_terms must be in 1..60");
    check(s.ris_elements >= 1 && s.ris_elements <= 100000, "[ris] elements must be in 1..100000");
    try
    {
        pointing::validate(s.geometry);
        throughput::validate(s.link);
    }
    catch (const DomainError& e)
    {
        throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
    check(s.link.kappa_t <= 1.0 && s.link.kappa_r <= 1.0, "[link] kappa values must not exceed 1");
    if (s.path_loss)
    {
        const auto& p = *s.path_loss;
        check(p.l1 > 0.0 && p.l2 > 0.0, "[link] l1 and l2 must be positive");
        check(p.L1 > 0.0, "[link] l1_m must be positive");
        check(p.P_s > 0.0 && p.sigma_w2 > 0.0, "[link] p_s and sigma_w2 must be positive");
    }
    check(s.r_th > 0.0, "[run] r_th must be positive");
    check(s.trials >= 1, "[run] trials must be at least 1");
    check(s.threads <= 1024, "[run] threads must be at most 1024");
    check(s.sweep.param == "rth" || s.sweep.param == "gamma_db" || s.sweep.param == "l2_m" ||
              s.sweep.param == "kappa",
          "[sweep] param must be one of rth, gamma_db, l2_m, kappa");
    check(s.sweep.points >= 2 && s.sweep.points <= 10000, "[sweep] points must be in 2..10000");
    check(s.compare.points >= 1 && s.compare.points <= 1000, "[compare] points must be in 1..1000");
    check(s.compare.rth_start > 0.0 && s.compare.rth_stop >= s.compare.rth_start,
          "[compare] need 0 < rth_start <= rth_stop");
    check(s.compare.tolerance_abs >= 0.0 && s.compare.tolerance_rel >= 0.0,
          "[compare] tolerances must be non-negative");
}

throughput::LinkBudget effective_budget(const Scenario& s)
{
    throughput::LinkBudget b = s.link;
    if (s.path_loss)
    {
        throughput::PathLoss p = *s.path_loss;
        p.L2 = s.geometry.L2;
        b.gamma_db = linear_to_db(throughput::gamma_from_path_loss(p));
    }
    return b;
}

fading::MixtureGammaModel sr_model(const Scenario& s) { return fading::nakagami_to_mg(s.nakagami_m); }

fading::MixtureGammaModel ru_model(const Scenario& s)
{
    return fading::rice_to_mg(db_to_linear(s.rice_k_db), s.mg_terms);
}

cascade::GKFit fit(const Scenario& s)
{
    return cascade::fit_cascade(sr_model(s), ru_model(s), cascade::RisConfig{s.ris_elements});
}

std::optional<pointing::PointingStats> misalignment_stats(const Scenario& s)
{
    if (!s.misalignment)
        return std::nullopt;
    return pointing::pointing_stats(s.geometry);
}

montecarlo::SimScenario sim_scenario(const Scenario& s)
{
    montecarlo::SimScenario sim;
    sim.ris = cascade::RisConfig{s.ris_elements};
    if (s.sampler == Sampler::Exact)
    {
        sim.sr = fading::NakagamiSpec{s.nakagami_m};
        sim.ru = fading::RiceSpec{db_to_linear(s.rice_k_db)};
    }
    else
    {
        sim.sr = sr_model(s);
        sim.ru = ru_model(s);
    }
    sim.misalignment = misalignment_stats(s);
    sim.budget = effective_budget(s);
    sim.r_th = s.r_th;
    sim.trials = s.trials;
    sim.seed = s.seed;
    sim.threads = s.threads;
    return sim;
}

} // namespace risuav::cli
