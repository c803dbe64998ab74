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

#include "risuav/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "risuav/error.hpp"
#include "risuav/numeric.hpp"

namespace risuav::throughput
{
namespace
{
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_rate(double r_th)
{
    if (!(r_th > 0.0) || !std::isfinite(r_th))
        throw DomainError("throughput: r_th must be positive and finite");
}

// Roundoff can push a CDF a few ulps outside [0, 1].
double success_fraction(double cdf) { return 1.0 - std::clamp(cdf, 0.0, 1.0); }
} // namespace

double spreading_loss(const PathLoss& pl)
{
    if (!(pl.L1 > 0.0) || !(pl.L2 > 0.0))
        throw DomainError("path loss: distances must be positive");
    return pl.l1 * std::pow(pl.L1, -0.5 * pl.n1) * pl.l2 * std::pow(pl.L2, -0.5 * pl.n2);
}

double gamma_from_path_loss(const PathLoss& pl)
{
    if (!(pl.P_s > 0.0) || !(pl.sigma_w2 > 0.0))
        throw DomainError("path loss: transmit power and noise variance must be positive");
    const double h = spreading_loss(pl);
    return h * h * pl.P_s / pl.sigma_w2;
}

double LinkBudget::gamma() const { return db_to_linear(gamma_db); }

double LinkBudget::distortion() const { return kappa_t * kappa_t + kappa_r * kappa_r; }

void validate(const LinkBudget& budget)
{
    if (!std::isfinite(budget.gamma_db))
        throw DomainError("link budget: gamma_db must be finite");
    if (!(budget.kappa_t >= 0.0) || !(budget.kappa_r >= 0.0) || !std::isfinite(budget.kappa_t) ||
        !std::isfinite(budget.kappa_r))
        throw DomainError("link budget: kappa_t and kappa_r must be non-negative");
}

double sdnr(double A, const LinkBudget& budget)
{
    if (!(A >= 0.0))
        throw DomainError("sdnr: gain must be non-negative");
    const double a2 = A * A;
    return a2 / (budget.distortion() * a2 + 1.0 / budget.gamma());
}

double max_rth(double kappa_t, double kappa_r)
{
    const double s = kappa_t * kappa_t + kappa_r * kappa_r;
    if (s == 0.0)
        return kInf;
    return std::log2(1.0 + 1.0 / s);
}

double gain_threshold(double r_th, const LinkBudget& budget)
{
    require_rate(r_th);
    validate(budget);
    if (r_th >= max_rth(budget.kappa_t, budget.kappa_r))
        return kInf;
    const double excess = std::exp2(r_th) - 1.0;
    const double headroom = 1.0 - budget.distortion() * excess;
    return std::sqrt(excess / (budget.gamma() * headroom));
}

double throughput_wo(double r_th, const LinkBudget& budget, const cascade::GKFit& fit,
                     const specfun::MeijerGOptions& options)
{
    const double x = gain_threshold(r_th, budget);
    if (std::isinf(x))
        return 0.0;
    return r_th * success_fraction(cascade::cdf_A(fit, x, options));
}

double throughput_w(double r_th, const LinkBudget& budget, const cascade::GKFit& fit,
                    const pointing::PointingStats& stats, const specfun::MeijerGOptions& options)
{
    const double x = gain_threshold(r_th, budget);
    if (std::isinf(x))
        return 0.0;
    return r_th * success_fraction(cascade::cdf_A_e2e(fit, stats, x, options));
}

double throughput(double r_th, const LinkBudget& budget, const cascade::GKFit& fit,
                  const std::optional<pointing::PointingStats>& stats,
                  const specfun::MeijerGOptions& options)
{
    return stats ? throughput_w(r_th, budget, fit, *stats, options)
                 : throughput_wo(r_th, budget, fit, options);
}

} // namespace risuav::throughput
