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

#include "risuav/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "risuav/error.hpp"

namespace risuav::cli
{
namespace
{
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Range
{
    double start;
    double stop;
};

Range default_range(const std::string& param)
{
    if (param == "rth")
        return {0.5, 6.0};
    if (param == "gamma_db")
        return {-5.0, 5.0};
    if (param == "l2_m")
        return {10.0, 100.0};
    return {0.0, 0.2}; // kappa
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& text, const std::string& where)
{
    if (text == "nan")
        return kNaN;
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(text, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw ConfigError(where + ": not a number: '" + text + "'");
    return v;
}

std::string svg_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick_label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(x) < 1e-12 ? 0.0 : x);
    return buf;
}

// Tick spacing of 1, 2 or 5 times a power of ten giving about `target` ticks.
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    return (f < 1.5 ? 1.0 : f < 3.5 ? 2.0 : f < 7.5 ? 5.0 : 10.0) * mag;
}

std::string escape(const std::string& s)
{
    std::string r;
    for (char ch : s)
    {
        switch (ch)
        {
        case '&':
            r += "&amp;";
            break;
        case '<':
            r += "&lt;";
            break;
        case '>':
            r += "&gt;";
            break;
        case '"':
            r += "&quot;";
            break;
        default:
            r += ch;
        }
    }
    return r;
}
} // namespace

std::vector<double> sweep_grid(const Scenario& s)
{
    const Range def = default_range(s.sweep.param);
    double start = s.sweep.start.value_or(def.start);
    double stop = s.sweep.stop.value_or(def.stop);
    if (s.sweep.param == "rth")
    {
        const double ceiling = throughput::max_rth(s.link.kappa_t, s.link.kappa_r);
        if (std::isfinite(ceiling))
            stop = std::min(stop, ceiling + 0.25);
    }
    if (!(stop > start))
        throw ConfigError("invalid scenario: [sweep] stop must exceed start");
    if (s.sweep.param == "rth" && !(start > 0.0))
        throw ConfigError("invalid scenario: rate sweep must start above 0");
    if (s.sweep.log_scale && !(start > 0.0))
        throw ConfigError("invalid scenario: log sweep needs a positive start");

    std::vector<double> grid;
    const int n = s.sweep.points;
    for (int i = 0; i < n; ++i)
    {
        const double t = static_cast<double>(i) / (n - 1);
        grid.push_back(s.sweep.log_scale ? start * std::pow(stop / start, t)
                                         : start + (stop - start) * t);
    }
    grid.back() = stop;
    return grid;
}

Scenario with_parameter(Scenario s, const std::string& param, double value)
{
    if (param == "rth")
        s.r_th = value;
    else if (param == "gamma_db")
    {
        s.link.gamma_db = value;
        s.path_loss.reset();
    }
    else if (param == "l2_m")
        s.geometry.L2 = value;
    else if (param == "kappa")
        s.link.kappa_t = s.link.kappa_r = value;
    else
        throw ConfigError("unknown sweep parameter '" + param + "'");
    validate(s);
    return s;
}

SweepResult run_sweep(const Scenario& s, bool with_mc)
{
    SweepResult result;
    result.param = s.sweep.param;
    const std::vector<double> grid = sweep_grid(s);
    const cascade::GKFit gk = fit(s);

    std::vector<montecarlo::SimResult> rate_mc;
    if (with_mc && s.sweep.param == "rth")
    {
        const auto sweep = montecarlo::simulate_thresholds(sim_scenario(s), grid);
        rate_mc = s.misalignment ? sweep.with : sweep.without;
    }

    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        SweepRow row;
        row.param = grid[i];
        const Scenario point = with_parameter(s, s.sweep.param, grid[i]);
        try
        {
            row.analytic = throughput::throughput(point.r_th, effective_budget(point), gk,
                                                  misalignment_stats(point));
        }
        catch (const DegenerateError&)
        {
            throw;
        }
        catch (const Error& e)
        {
            row.analytic = kNaN;
            result.notes.push_back(s.sweep.param + "=" + format_number(grid[i]) + ": " + e.what());
        }
        if (with_mc)
        {
            const montecarlo::SimResult mc =
                rate_mc.empty() ? montecarlo::simulate(sim_scenario(point)) : rate_mc[i];
            row.mc = mc.throughput;
            row.mc_stderr = mc.stderr_throughput;
        }
        result.rows.push_back(row);
    }
    return result;
}

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& out, const SweepResult& r)
{
    out << "param,analytic,mc,mc_stderr\n";
    for (const auto& row : r.rows)
    {
        out << format_number(row.param) << ',' << format_number(row.analytic) << ',';
        if (row.mc)
            out << format_number(*row.mc);
        out << ',';
        if (row.mc_stderr)
            out << format_number(*row.mc_stderr);
        out << '\n';
    }
}

SweepResult read_csv(std::istream& in, const std::string& source)
{
    SweepResult r;
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError(source + ": empty CSV");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    const auto header = split_csv(line);
    const bool full = header == std::vector<std::string>{"param", "analytic", "mc", "mc_stderr"};
    const bool bare = header == std::vector<std::string>{"param", "analytic"};
    if (!full && !bare)
        throw ConfigError(source + ":1: expected header 'param,analytic,mc,mc_stderr'");
    r.param = "param";
    int number = 1;
    while (std::getline(in, line))
    {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const std::string where = source + ":" + std::to_string(number);
        const auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw ConfigError(where + ": expected " + std::to_string(header.size()) + " columns");
        SweepRow row;
        row.param = parse_cell(cells[0], where);
        row.analytic = parse_cell(cells[1], where);
        if (full && !cells[2].empty())
            row.mc = parse_cell(cells[2], where);
        if (full && !cells[3].empty())
            row.mc_stderr = parse_cell(cells[3], where);
        if (std::isnan(row.param))
            throw ConfigError(where + ": param must be a number");
        if (!r.rows.empty() && row.param < r.rows.back().param)
            throw ConfigError(where + ": rows must be sorted by param");
        r.rows.push_back(row);
    }
    if (r.rows.empty())
        throw ConfigError(source + ": no data rows");
    return r;
}

void write_svg(std::ostream& out, const SweepResult& r)
{
    constexpr double W = 720.0;
    constexpr double H = 480.0;
    constexpr double left = 72.0;
    constexpr double right = 24.0;
    constexpr double top = 24.0;
    constexpr double bottom = 56.0;

    double x_lo = r.rows.front().param;
    double x_hi = r.rows.back().param;
    double y_lo = 0.0;
    double y_hi = 0.0;
    bool any_mc = false;
    for (const auto& row : r.rows)
    {
        auto grow = [&](double v) {
            if (std::isfinite(v))
            {
                y_lo = std::min(y_lo, v);
                y_hi = std::max(y_hi, v);
            }
        };
        grow(row.analytic);
        if (row.mc)
        {
            any_mc = true;
            const double e = row.mc_stderr.value_or(0.0);
            grow(*row.mc - e);
            grow(*row.mc + e);
        }
    }
    if (x_hi == x_lo)
    {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    if (y_hi == y_lo)
        y_hi = y_lo + 1.0;
    const double y_step = nice_step(y_hi - y_lo, 5);
    y_lo = std::floor(y_lo / y_step) * y_step;
    y_hi = std::ceil(y_hi / y_step) * y_step;

    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (W - left - right); };
    auto py = [&](double y) { return H - bottom - (y - y_lo) / (y_hi - y_lo) * (H - top - bottom); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
           "viewBox=\"0 0 720 480\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"720\" height=\"480\" fill=\"white\"/>\n";

    // axes and ticks
    out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "<line x1=\"" << svg_number(left) << "\" y1=\"" << svg_number(H - bottom) << "\" x2=\""
        << svg_number(W - right) << "\" y2=\"" << svg_number(H - bottom) << "\"/>\n"
        << "<line x1=\"" << svg_number(left) << "\" y1=\"" << svg_number(top) << "\" x2=\""
        << svg_number(left) << "\" y2=\"" << svg_number(H - bottom) << "\"/>\n</g>\n";
    out << "<g fill=\"black\">\n";
    const double x_step = nice_step(x_hi - x_lo, 6);
    for (double t = std::ceil(x_lo / x_step) * x_step; t <= x_hi + 1e-9 * x_step; t += x_step)
        out << "<text x=\"" << svg_number(px(t)) << "\" y=\"" << svg_number(H - bottom + 18)
            << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    for (double t = y_lo; t <= y_hi + 1e-9 * y_step; t += y_step)
        out << "<text x=\"" << svg_number(left - 8) << "\" y=\"" << svg_number(py(t) + 4)
            << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    out << "<text x=\"" << svg_number(0.5 * (left + W - right)) << "\" y=\"" << svg_number(H - 12)
        << "\" text-anchor=\"middle\">" << escape(r.param) << "</text>\n"
        << "<text x=\"18\" y=\"" << svg_number(0.5 * (top + H - bottom))
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << svg_number(0.5 * (top + H - bottom)) << ")\">"
        << (any_mc ? "analytic, mc" : "analytic") << "</text>\n</g>\n";

    // analytic curve, broken at NaN points
    std::string path;
    bool pen_down = false;
    for (const auto& row : r.rows)
    {
        if (!std::isfinite(row.analytic))
        {
            pen_down = false;
            continue;
        }
        path += (pen_down ? " L" : (path.empty() ? "M" : " M")) + svg_number(px(row.param)) + " " +
                svg_number(py(row.analytic));
        pen_down = true;
    }
    if (!path.empty())
        out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";

    if (any_mc)
    {
        out << "<g stroke=\"#b22222\" fill=\"#b22222\">\n";
        for (const auto& row : r.rows)
        {
            if (!row.mc || !std::isfinite(*row.mc))
                continue;
            const double e = row.mc_stderr.value_or(0.0);
            const std::string x = svg_number(px(row.param));
            if (e > 0.0)
                out << "<line x1=\"" << x << "\" y1=\"" << svg_number(py(*row.mc - e)) << "\" x2=\""
                    << x << "\" y2=\"" << svg_number(py(*row.mc + e)) << "\"/>\n";
            out << "<circle cx=\"" << x << "\" cy=\"" << svg_number(py(*row.mc)) << "\" r=\"3\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

} // namespace risuav::cli
