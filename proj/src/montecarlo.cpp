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

#include "risuav/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "risuav/error.hpp"
#include "risuav/random.hpp"

namespace risuav::montecarlo
{
namespace
{
struct Draw
{
    double A;
    double hg;
};

class TrialSource
{
  public:
    explicit TrialSource(const SimScenario& s) : s_(s), sr_(s.sr), ru_(s.ru)
    {
        if (s.ris.N < 1)
            throw DomainError("montecarlo: N must be at least 1");
        if (s.trials < 1)
            throw DomainError("montecarlo: trials must be at least 1");
    }

    // Trial t always reads the same stream, whichever worker runs it.
    Draw operator()(std::uint64_t trial) const
    {
        Philox4x32 engine(s_.seed, trial);
        double A = 0.0;
        for (int i = 0; i < s_.ris.N; ++i)
        {
            const double h = sr_(engine);
            const double g = ru_(engine);
            A += h * g;
        }
        const double hg = s_.misalignment ? pointing::hg_sample(*s_.misalignment, engine) : 1.0;
        return {A, hg};
    }

  private:
    const SimScenario& s_;
    fading::EnvelopeSampler sr_;
    fading::EnvelopeSampler ru_;
};

unsigned worker_count(const SimScenario& s)
{
    unsigned n = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, s.trials));
}

// Runs body(first, last, worker) on contiguous trial ranges.
template <class Body>
void partition(const SimScenario& s, Body body)
{
    const unsigned workers = worker_count(s);
    if (workers <= 1)
    {
        body(0, s.trials, 0u);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::uint64_t chunk = s.trials / workers;
    const std::uint64_t extra = s.trials % workers;
    std::uint64_t first = 0;
    for (unsigned w = 0; w < workers; ++w)
    {
        const std::uint64_t last = first + chunk + (w < extra ? 1 : 0);
        pool.emplace_back([&, first, last, w] {
            try
            {
                body(first, last, w);
            }
            catch (...)
            {
                errors[w] = std::current_exception();
            }
        });
        first = last;
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Success test for log2(1 + sdnr) > r_th, rearranged as
// A^2 (1 - s (2^r - 1)) > (2^r - 1) / gamma so the ceiling is an exact zero.
struct Criterion
{
    double headroom;
    double floor;

    Criterion(double r_th, const throughput::LinkBudget& b)
    {
        const double excess = std::exp2(r_th) - 1.0;
        headroom = 1.0 - b.distortion() * excess;
        floor = excess / b.gamma();
    }

    bool operator()(double gain) const { return headroom > 0.0 && gain * gain * headroom > floor; }
};

SimResult summarize(double r_th, std::uint64_t successes, std::uint64_t trials)
{
    SimResult r;
    r.trials = trials;
    r.successes = successes;
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    r.throughput = r_th * p;
    r.outage_rate = 1.0 - p;
    r.stderr_throughput = r_th * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return r;
}
} // namespace

ThresholdSweep simulate_thresholds(const SimScenario& scenario, const std::vector<double>& r_th)
{
    throughput::validate(scenario.budget);
    for (double r : r_th)
        if (!(r > 0.0) || !std::isfinite(r))
            throw DomainError("montecarlo: thresholds must be positive");
    const TrialSource source(scenario);
    std::vector<Criterion> tests;
    for (double r : r_th)
        tests.emplace_back(r, scenario.budget);

    const std::size_t K = r_th.size();
    const bool with_hg = scenario.misalignment.has_value();
    const unsigned workers = worker_count(scenario);
    // Integer tallies per worker; the sum does not depend on the split.
    std::vector<std::vector<std::uint64_t>> plain(workers, std::vector<std::uint64_t>(K, 0));
    std::vector<std::vector<std::uint64_t>> lossy(workers, std::vector<std::uint64_t>(K, 0));

    partition(scenario, [&](std::uint64_t first, std::uint64_t last, unsigned w) {
        auto& p = plain[w];
        auto& q = lossy[w];
        for (std::uint64_t t = first; t < last; ++t)
        {
            const Draw d = source(t);
            for (std::size_t k = 0; k < K; ++k)
            {
                p[k] += tests[k](d.A) ? 1u : 0u;
                if (with_hg)
                    q[k] += tests[k](d.hg * d.A) ? 1u : 0u;
            }
        }
    });

    ThresholdSweep out;
    for (std::size_t k = 0; k < K; ++k)
    {
        std::uint64_t a = 0;
        std::uint64_t b = 0;
        for (unsigned w = 0; w < workers; ++w)
        {
            a += plain[w][k];
            b += lossy[w][k];
        }
        out.without.push_back(summarize(r_th[k], a, scenario.trials));
        if (with_hg)
            out.with.push_back(summarize(r_th[k], b, scenario.trials));
    }
    return out;
}

SimResult simulate(const SimScenario& scenario)
{
    const ThresholdSweep sweep = simulate_thresholds(scenario, {scenario.r_th});
    return scenario.misalignment ? sweep.with.front() : sweep.without.front();
}

std::vector<double> sample_gain(const SimScenario& scenario, Variable variable)
{
    if (variable == Variable::A_e2e && !scenario.misalignment)
        throw DomainError("montecarlo: A_e2e needs misalignment statistics");
    const TrialSource source(scenario);
    std::vector<double> out(scenario.trials);
    partition(scenario, [&](std::uint64_t first, std::uint64_t last, unsigned) {
        for (std::uint64_t t = first; t < last; ++t)
        {
            const Draw d = source(t);
            out[t] = variable == Variable::A ? d.A : d.hg * d.A;
        }
    });
    return out;
}

std::vector<double> empirical_cdf(const SimScenario& scenario, Variable variable,
                                  const std::vector<double>& grid)
{
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw DomainError("empirical_cdf: grid must be ascending");
    std::vector<double> draws = sample_gain(scenario, variable);
    std::sort(draws.begin(), draws.end());
    std::vector<double> cdf;
    cdf.reserve(grid.size());
    for (double x : grid)
    {
        const auto below = std::upper_bound(draws.begin(), draws.end(), x) - draws.begin();
        cdf.push_back(static_cast<double>(below) / static_cast<double>(draws.size()));
    }
    return cdf;
}

} // namespace risuav::montecarlo
