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

#include "risuav/cascade.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "risuav/error.hpp"
#include "risuav/numeric.hpp"
#include "risuav/specfun.hpp"

namespace risuav::cascade
{
namespace
{
double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

double log_gamma_pair(const GKFit& fit)
{
    return specfun::log_gamma(fit.k_A) + specfun::log_gamma(fit.m_A);
}

void require_fit(const GKFit& fit)
{
    if (!(fit.k_A > 0.0) || !(fit.m_A > 0.0) || !(fit.Xi > 0.0))
        throw DomainError("cascade: generalized-K fit has non-positive parameters");
}
} // namespace

double chi_pdf(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g, double x)
{
    if (!(x > 0.0))
        throw DomainError("chi_pdf: argument must be positive");
    fading::validate(h);
    fading::validate(g);
    const double arg = 2.0 * std::sqrt(h.c * g.c) * x;
    const double log_ratio = std::log(h.c / g.c);
    CompensatedSum s;
    for (const auto& tm : h.terms)
        for (const auto& tk : g.terms)
        {
            const double bessel = specfun::bessel_k(tm.b - tk.b, arg);
            if (bessel == 0.0)
                continue;
            const double log_mag = -0.5 * (tm.b - tk.b) * log_ratio +
                                   (tm.b + tk.b - 1.0) * std::log(x) + std::log(bessel);
            s += 4.0 * tm.a * tk.a * std::exp(log_mag);
        }
    return s.value();
}

double chi_moment(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g, int l)
{
    if (l < 0)
        throw DomainError("chi_moment: order must be non-negative");
    fading::validate(h);
    fading::validate(g);
    const double lh = std::log(h.c);
    const double lg = std::log(g.c);
    CompensatedSum s;
    for (const auto& tm : h.terms)
        for (const auto& tk : g.terms)
        {
            // (c1/c2)^-(bm-bk)/2 (c1 c2)^-(bm+bk+l)/2 = c1^-(bm+l/2) c2^-(bk+l/2)
            const double sm = tm.b + 0.5 * l;
            const double sk = tk.b + 0.5 * l;
            s += tm.a * tk.a *
                 std::exp(specfun::log_gamma(sm) + specfun::log_gamma(sk) - sm * lh - sk * lg);
        }
    return s.value();
}

Moments chi_moments(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g)
{
    Moments mu{};
    for (int l = 0; l <= kMaxMomentOrder; ++l)
        mu[static_cast<std::size_t>(l)] = chi_moment(h, g, l);
    return mu;
}

Moments sum_moments(const Moments& mu_chi, int N)
{
    if (N < 1)
        throw DomainError("sum_moments: N must be at least 1");
    Moments acc = mu_chi;
    for (int j = 1; j < N; ++j)
    {
        Moments next{};
        for (int l = 0; l <= kMaxMomentOrder; ++l)
        {
            CompensatedSum s;
            for (int i = 0; i <= l; ++i)
                s += binomial(l, i) * acc[static_cast<std::size_t>(i)] *
                     mu_chi[static_cast<std::size_t>(l - i)];
            next[static_cast<std::size_t>(l)] = s.value();
        }
        acc = next;
    }
    return acc;
}

GKFit gk_fit(const Moments& mu)
{
    const double m2 = mu[2];
    const double m4 = mu[4];
    const double m6 = mu[6];
    if (!(m2 > 0.0) || !(m4 > 0.0) || !(m6 > 0.0) || !std::isfinite(m6))
        throw DegenerateError("gk_fit: moments 2, 4, 6 must be finite and positive");

    const double a = m6 * m2 + m2 * m2 * m4 - 2.0 * m4 * m4;
    const double b = m6 * m2 - 4.0 * m4 * m4 + 3.0 * m2 * m2 * m4;
    const double c = 2.0 * m2 * m2 * m4;
    const double disc = b * b - 4.0 * a * c;
    if (!(a != 0.0) || !(disc >= 0.0))
        throw DegenerateError("gk_fit: moment equations have no real solution "
                              "(discriminant " + std::to_string(disc) + ")");
    // Cancellation-free pair: q = -(b + sign(b) sqrt(disc)) / 2, roots q/a, c/q.
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double r1 = q / a;
    const double r2 = c / q;
    if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2))
        throw DegenerateError("gk_fit: a generalized-K shape is not positive");

    GKFit fit;
    fit.k_A = std::max(r1, r2);
    fit.m_A = std::min(r1, r2);
    fit.Omega_A = m2;
    fit.Xi = std::sqrt(fit.k_A * fit.m_A / fit.Omega_A);
    fit.moments = mu;
    return fit;
}

GKFit fit_cascade(const fading::MixtureGammaModel& h, const fading::MixtureGammaModel& g,
                  const RisConfig& ris)
{
    return gk_fit(sum_moments(chi_moments(h, g), ris.N));
}

double cdf_A(const GKFit& fit, double x, const specfun::MeijerGOptions& options)
{
    require_fit(fit);
    if (!(x >= 0.0))
        throw DomainError("cdf_A: argument must be non-negative");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    const specfun::MeijerGSpec spec{2, 1, {1.0}, {fit.k_A, fit.m_A, 0.0}};
    const double z = fit.Xi * fit.Xi * x * x;
    const double g = specfun::meijer_g(spec, z, options);
    return g * std::exp(-log_gamma_pair(fit));
}

double cdf_A_e2e(const GKFit& fit, const pointing::PointingStats& stats, double x,
                 const specfun::MeijerGOptions& options)
{
    require_fit(fit);
    if (!(x >= 0.0))
        throw DomainError("cdf_A_e2e: argument must be non-negative");
    if (!(stats.B_o > 0.0) || !(stats.zeta > 0.0))
        throw DomainError("cdf_A_e2e: invalid misalignment statistics");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    // h_g degenerates to the constant B_o.
    if (std::isinf(stats.zeta))
        return cdf_A(fit, x / stats.B_o, options);

    const double zeta = stats.zeta;
    const specfun::MeijerGSpec spec{
        1, 4,
        {1.0 - fit.k_A, 1.0 - fit.m_A, 0.5 * (1.0 - zeta), 0.5 * (2.0 - zeta), 1.0},
        {0.0, 0.5 * (1.0 - zeta), -0.5 * zeta}};
    const double z = stats.B_o * stats.B_o / (fit.Xi * fit.Xi * x * x);
    const double g = specfun::meijer_g(spec, z, options);
    return 0.5 * zeta * g * std::exp(-log_gamma_pair(fit));
}

} // namespace risuav::cascade
