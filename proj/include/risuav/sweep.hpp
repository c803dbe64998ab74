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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "risuav/scenario.hpp"

namespace risuav::cli
{
struct SweepRow
{
    double param = 0.0;
    double analytic = 0.0; // NaN when the closed form failed at this point
    std::optional<double> mc;
    std::optional<double> mc_stderr;
};

struct SweepResult
{
    std::string param;
    std::vector<SweepRow> rows;
    std::vector<std::string> notes; // one per failed point
};

/// Parameter values of the sweep, after applying per-parameter default
/// ranges and capping rate sweeps just past the hardware ceiling.
std::vector<double> sweep_grid(const Scenario& scenario);

/// Scenario with the swept parameter set to `value`.
Scenario with_parameter(Scenario scenario, const std::string& param, double value);

SweepResult run_sweep(const Scenario& scenario, bool with_mc);

/// Shortest-round-trip-safe formatting (%.17g); "nan" for NaN.
std::string format_number(double x);

void write_csv(std::ostream& out, const SweepResult& result);

/// Reads the `param,analytic,mc,mc_stderr` format back. Throws ConfigError.
SweepResult read_csv(std::istream& in, const std::string& source);

/// Line chart of a sweep. Identical input gives identical bytes.
void write_svg(std::ostream& out, const SweepResult& result);

} // namespace risuav::cli
