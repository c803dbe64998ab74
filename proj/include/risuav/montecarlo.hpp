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
#include <optional>
#include <vector>

#include "risuav/cascade.hpp"
#include "risuav/fading.hpp"
#include "risuav/pointing.hpp"
#include "risuav/throughput.hpp"

namespace risuav::montecarlo
{
struct SimScenario
{
    cascade::RisConfig ris;
    fading::EnvelopeModel sr = fading::NakagamiSpec{2.0};     // source-RIS envelopes
    fading::EnvelopeModel ru = fading::RiceSpec{3.1622776601683795}; // RIS-UAV envelopes
    std::optional<pointing::PointingStats> misalignment;      // absent: h_g = 1
    throughput::LinkBudget budget;
    double r_th = 2.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0; // 0: hardware concurrency
};

struct SimResult
{
    double throughput = 0.0;
    double outage_rate = 0.0;
    double stderr_throughput = 0.0; // binomial standard error of `throughput`
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
};

/// Throughput estimate at scenario.r_th.
SimResult simulate(const SimScenario& scenario);

struct ThresholdSweep
{
    std::vector<SimResult> without; // h_g = 1
    std::vector<SimResult> with;    // h_g drawn; empty without misalignment stats
};

/// One set of channel draws scored against several thresholds, with and
/// without the geometric loss. scenario.r_th is ignored.
ThresholdSweep simulate_thresholds(const SimScenario& scenario, const std::vector<double>& r_th);

enum class Variable
{
    A,    // sum_i |h_i| |g_i|
    A_e2e // h_g A
};

/// Empirical CDF of A or h_g A on an ascending grid.
std::vector<double> empirical_cdf(const SimScenario& scenario, Variable variable,
                                  const std::vector<double>& grid);

/// Draws of A (or h_g A), in trial order; for oracle tests.
std::vector<double> sample_gain(const SimScenario& scenario, Variable variable);

} // namespace risuav::montecarlo
