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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "risuav/cascade.hpp"
#include "risuav/fading.hpp"
#include "risuav/montecarlo.hpp"
#include "risuav/pointing.hpp"
#include "risuav/throughput.hpp"

namespace risuav::cli
{
enum class Sampler
{
    Exact,       // Nakagami / Rice envelopes drawn directly
    MixtureGamma // draw from the mixture-gamma approximations instead
};

struct SweepSpec
{
    std::string param = "rth"; // rth | gamma_db | l2_m | kappa
    std::optional<double> start;
    std::optional<double> stop;
    int points = 12;
    bool log_scale = false;
};

struct CompareSpec
{
    double rth_start = 1.0;
    double rth_stop = 7.0;
    int points = 5;
    double tolerance_abs = 0.02;
    double tolerance_rel = 0.05;
};

/// Everything one CLI run needs. Defaults reproduce the reference scenario.
struct Scenario
{
    // [fading]
    double nakagami_m = 2.0;
    double rice_k_db = 5.0;
    int mg_terms = 20;
    // [ris]
    int ris_elements = 16;
    // [geometry]
    pointing::PointingGeometry geometry;
    bool misalignment = true;
    // [link]
    throughput::LinkBudget link;
    std::optional<throughput::PathLoss> path_loss; // replaces gamma_db when present
    // [run]
    double r_th = 2.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    Sampler sampler = Sampler::Exact;
    // [sweep], [compare]
    SweepSpec sweep;
    CompareSpec compare;
};

/// Parses the INI-style scenario format. Keys missing from the text keep
/// their defaults. Throws ConfigError with "source:line:" prefixes.
Scenario parse_scenario(std::istream& in, const std::string& source);
Scenario load_scenario(const std::string& path);

/// Re-checks every invariant; throws ConfigError.
void validate(const Scenario& scenario);

/// Normalized SNR after applying the path-loss tuple, if any.
throughput::LinkBudget effective_budget(const Scenario& scenario);

fading::MixtureGammaModel sr_model(const Scenario& scenario);
fading::MixtureGammaModel ru_model(const Scenario& scenario);
cascade::GKFit fit(const Scenario& scenario);
std::optional<pointing::PointingStats> misalignment_stats(const Scenario& scenario);
montecarlo::SimScenario sim_scenario(const Scenario& scenario);

} // namespace risuav::cli
