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

#include <array>

#include "risuav/fading.hpp"
#include "risuav/meijer_g.hpp"
#include "risuav/pointing.hpp"

namespace risuav::cascade
{
inline constexpr int kMaxMomentOrder = 6;
using Moments = std::array<double, kMaxMomentOrder + 1>; // orders 0..6

struct RisConfig
{
    int N = 16; // meta-atoms, unit gain, optimal phases
};

/// Generalized-K surrogate for A = sum_i |h_i| |g_i|.
struct GKFit
{
    double k_A = 0.0;
    double m_A = 0.0;
    double Xi = 0.0;
    double Omega_A = 0.0;
    Moments moments{}; // mu_A(0..6)
};

/// Density of one product |h| |g| of independent mixture-gamma envelopes.
double chi_pdf(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g, double x);
double chi_moment(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g, int l);
Moments chi_moments(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g);

/// Raw moments of an N-fold iid sum, by repeated binomial convolution.
Moments sum_moments(const Moments& mu_chi, int N);

/// Two-shape moment match on mu(2), mu(4), mu(6). Throws DegenerateError
/// when the quadratic has no positive real roots.
GKFit gk_fit(const Moments& mu_A);

GKFit fit_cascade(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g,
                  const RisConfig& ris);

/// CDF of A under the fit.
double cdf_A(const GKFit& fit, double x, const specfun::MeijerGOptions& options = {});

/// CDF of h_g A.
double cdf_A_e2e(const GKFit& fit, const pointing::PointingStats& stats, double x,
                 const specfun::MeijerGOptions& options = {});

} // namespace risuav::cascade
