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

#include "risuav/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "risuav/error.hpp"
#include "risuav/numeric.hpp"
#include "risuav/scenario.hpp"
#include "risuav/sweep.hpp"

namespace risuav::cli
{
namespace
{
struct Flags
{
    std::string config;
    std::string param;
    std::string out;
    std::string input;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<unsigned> threads;
    std::optional<double> tolerance_rel;
    bool mc = false;
    bool machine = false;
    double xi_scale = 1.0;
};

class Report
{
  public:
    Report(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

    void comment(const std::string& text)
    {
        if (!machine_)
            out_ << "# " << text << '\n';
    }

    void value(const std::string& key, double v)
    {
        if (machine_)
        {
            out_ << key << '=' << format_number(v) << '\n';
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        out_ << key << '=' << buf << '\n';
    }

    void text(const std::string& key, const std::string& v) { out_ << key << '=' << v << '\n'; }

  private:
    std::ostream& out_;
    bool machine_;
};

Scenario load(const Flags& f)
{
    Scenario s;
    if (!f.config.empty())
        s = load_scenario(f.config);
    if (f.seed)
        s.seed = *f.seed;
    if (f.trials)
        s.trials = *f.trials;
    if (f.threads)
        s.threads = *f.threads;
    if (f.tolerance_rel)
        s.compare.tolerance_rel = *f.tolerance_rel;
    if (!f.param.empty() && f.param != s.sweep.param)
    {
        // Bounds in the file belong to another parameter.
        s.sweep.param = f.param;
        s.sweep.start.reset();
        s.sweep.stop.reset();
        s.sweep.log_scale = false;
    }
    if (!(f.xi_scale > 0.0))
        throw ConfigError("--xi-scale must be positive");
    validate(s);
    return s;
}

cascade::GKFit scaled_fit(const Scenario& s, const Flags& f)
{
    cascade::GKFit gk = fit(s);
    gk.Xi *= f.xi_scale;
    return gk;
}

std::string variant(const Scenario& s)
{
    return s.misalignment ? "with-misalignment" : "without-misalignment";
}

// Writes to --out when given, else to the command's stdout.
template <class Writer>
void emit(const Flags& f, std::ostream& out, Writer write)
{
    if (f.out.empty())
    {
        write(out);
        return;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file)
        throw ConfigError("cannot open output file '" + f.out + "'");
    write(file);
    if (!file)
        throw ConfigError("failed writing '" + f.out + "'");
}

int cmd_fit(const Flags& f, std::ostream& out)
{
    const Scenario s = load(f);
    Report r(out, f.machine);
    const auto sr = sr_model(s);
    const auto ru = ru_model(s);
    r.comment("source-RIS envelope: Nakagami-m as a one-term mixture-gamma model");
    r.value("sr_m", s.nakagami_m);
    r.value("sr_a", sr.terms.front().a);
    r.value("sr_b", sr.terms.front().b);
    r.value("sr_c", sr.c);
    r.comment("RIS-UAV envelope: Rice as a mixture-gamma model");
    r.value("ru_k_db", s.rice_k_db);
    r.value("ru_terms", static_cast<double>(ru.terms.size()));
    r.value("ru_c", ru.c);
    for (std::size_t j = 0; j < ru.terms.size(); ++j)
        r.value("ru_a" + std::to_string(j + 1), ru.terms[j].a);
    if (const auto stats = misalignment_stats(s))
    {
        r.comment("misalignment statistics");
        r.value("w_L2", stats->w_L2);
        r.value("rho_min", stats->rho_min);
        r.value("rho_max", stats->rho_max);
        r.value("v_min", stats->v_min);
        r.value("v_max", stats->v_max);
        r.value("k_m", stats->k_m);
        r.value("B_o", stats->B_o);
        r.value("zeta", stats->zeta);
    }
    const cascade::GKFit gk = scaled_fit(s, f);
    r.comment("moments of A over N = " + std::to_string(s.ris_elements) + " meta-atoms");
    for (int l = 1; l <= cascade::kMaxMomentOrder; ++l)
        r.value("mu_A" + std::to_string(l), gk.moments[static_cast<std::size_t>(l)]);
    r.comment("generalized-K fit");
    r.value("k_A", gk.k_A);
    r.value("m_A", gk.m_A);
    r.value("Xi", gk.Xi);
    r.value("Omega_A", gk.Omega_A);
    return kExitOk;
}

int cmd_eval(const Flags& f, std::ostream& out)
{
    const Scenario s = load(f);
    const auto budget = effective_budget(s);
    const cascade::GKFit gk = scaled_fit(s, f);
    const auto stats = misalignment_stats(s);
    Report r(out, f.machine);
    r.text("variant", variant(s));
    r.value("r_th", s.r_th);
    r.value("gamma_db", budget.gamma_db);
    r.value("kappa_t", budget.kappa_t);
    r.value("kappa_r", budget.kappa_r);
    r.value("max_rth", throughput::max_rth(budget.kappa_t, budget.kappa_r));
    r.value("gain_threshold", throughput::gain_threshold(s.r_th, budget));
    r.value("throughput", throughput::throughput(s.r_th, budget, gk, stats));
    return kExitOk;
}

int cmd_mc(const Flags& f, std::ostream& out)
{
    const Scenario s = load(f);
    const auto res = montecarlo::simulate(sim_scenario(s));
    Report r(out, f.machine);
    r.text("variant", variant(s));
    r.value("r_th", s.r_th);
    r.text("trials", std::to_string(res.trials));
    r.text("successes", std::to_string(res.successes));
    r.text("seed", std::to_string(s.seed));
    r.value("throughput", res.throughput);
    r.value("stderr", res.stderr_throughput);
    r.value("outage_rate", res.outage_rate);
    return kExitOk;
}

int cmd_sweep(const Flags& f, std::ostream& out, std::ostream& err)
{
    const Scenario s = load(f);
    const SweepResult result = run_sweep(s, f.mc);
    emit(f, out, [&](std::ostream& o) { write_csv(o, result); });
    for (const auto& note : result.notes)
        err << "risuav: sweep point failed: " << note << '\n';
    return result.notes.empty() ? kExitOk : kExitNumerical;
}

int cmd_compare(const Flags& f, std::ostream& out)
{
    const Scenario s = load(f);
    const auto budget = effective_budget(s);
    const cascade::GKFit gk = scaled_fit(s, f);
    const auto stats = misalignment_stats(s);
    const CompareSpec& c = s.compare;

    std::vector<double> grid;
    for (int i = 0; i < c.points; ++i)
        grid.push_back(c.points == 1 ? c.rth_start
                                     : c.rth_start + (c.rth_stop - c.rth_start) * i / (c.points - 1));
    const auto mc = montecarlo::simulate_thresholds(sim_scenario(s), grid);
    const auto& sims = s.misalignment ? mc.with : mc.without;

    out << "# variant=" << variant(s) << " trials=" << s.trials << " seed=" << s.seed
        << " tolerance_abs=" << format_number(c.tolerance_abs)
        << " tolerance_rel=" << format_number(c.tolerance_rel) << '\n';
    out << "r_th,analytic,mc,mc_stderr,allowed,status\n";
    bool all_pass = true;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const double analytic = throughput::throughput(grid[i], budget, gk, stats);
        const auto& m = sims[i];
        const double allowed =
            std::max({c.tolerance_abs, c.tolerance_rel * analytic, 3.0 * m.stderr_throughput});
        const bool pass = std::abs(analytic - m.throughput) <= allowed;
        all_pass = all_pass && pass;
        out << format_number(grid[i]) << ',' << format_number(analytic) << ','
            << format_number(m.throughput) << ',' << format_number(m.stderr_throughput) << ','
            << format_number(allowed) << ',' << (pass ? "PASS" : "FAIL") << '\n';
    }
    out << "overall=" << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? kExitOk : kExitCompareFailed;
}

int cmd_plot(const Flags& f, std::ostream& out)
{
    std::ifstream in(f.input, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open CSV '" + f.input + "'");
    const SweepResult data = read_csv(in, f.input);
    emit(f, out, [&](std::ostream& o) { write_svg(o, data); });
    return kExitOk;
}
} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Throughput of RIS-assisted UAV links: closed forms and Monte Carlo", "risuav"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Flags f;

    app.add_option("--config", f.config, "Scenario file");
    app.add_option("--seed", f.seed, "Monte Carlo seed");
    app.add_option("--trials", f.trials, "Monte Carlo trials");
    app.add_option("--threads", f.threads, "Worker threads (0: all cores)");
    app.add_option("--out", f.out, "Write output to this file");
    app.add_flag("--machine", f.machine, "key=value output at full precision");
    app.add_option("--xi-scale", f.xi_scale, "Multiply the fitted Xi (harness check)")
        ->group("");

    auto* fit_cmd = app.add_subcommand("fit", "Print mixture-gamma, pointing and generalized-K fits");
    auto* eval_cmd = app.add_subcommand("eval", "Closed-form throughput at [run] r_th");
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo throughput at [run] r_th");
    auto* sweep_cmd = app.add_subcommand("sweep", "One-parameter sweep as CSV");
    sweep_cmd->add_option("--param", f.param, "rth | gamma_db | l2_m | kappa")
        ->check(CLI::IsMember({"rth", "gamma_db", "l2_m", "kappa"}));
    sweep_cmd->add_flag("--mc,!--no-mc", f.mc, "Add Monte Carlo columns");
    auto* compare_cmd = app.add_subcommand("compare", "Closed form vs Monte Carlo with tolerances");
    compare_cmd->add_option("--tolerance-rel", f.tolerance_rel, "Relative tolerance");
    auto* plot_cmd = app.add_subcommand("plot", "Render a sweep CSV as SVG");
    plot_cmd->add_option("input", f.input, "Sweep CSV")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        if (fit_cmd->parsed())
            return cmd_fit(f, out);
        if (eval_cmd->parsed())
            return cmd_eval(f, out);
        if (mc_cmd->parsed())
            return cmd_mc(f, out);
        if (sweep_cmd->parsed())
            return cmd_sweep(f, out, err);
        if (compare_cmd->parsed())
            return cmd_compare(f, out);
        if (plot_cmd->parsed())
            return cmd_plot(f, out);
    }
    catch (const ConfigError& e)
    {
        err << "risuav: configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const DegenerateError& e)
    {
        err << "risuav: degenerate model: " << e.what() << '\n';
        return kExitDegenerate;
    }
    catch (const Error& e)
    {
        err << "risuav: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    catch (const std::exception& e)
    {
        err << "risuav: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitConfig;
}

} // namespace risuav::cli
