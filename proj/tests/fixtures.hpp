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

// Fixture sets and reference computations shared by the unit tests and the
// acceptance runner.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "risuav/cascade.hpp"
#include "risuav/meijer_g.hpp"
#include "risuav/pointing.hpp"

namespace risuav::testing
{
struct MeijerFixture
{
    specfun::MeijerGSpec spec;
    double z;
};

inline specfun::MeijerGSpec cdf_instance(double k, double m)
{
    return {2, 1, {1.0}, {k, m, 0.0}};
}

inline specfun::MeijerGSpec e2e_instance(double k, double m, double zeta)
{
    return {1, 4,
            {1.0 - k, 1.0 - m, 0.5 * (1.0 - zeta), 0.5 * (2.0 - zeta), 1.0},
            {0.0, 0.5 * (1.0 - zeta), -0.5 * zeta}};
}

// 25 instances of each closed-form shape. Shapes avoid integer spacing so
// both backends run unperturbed.
inline std::vector<MeijerFixture> meijer_grid()
{
    std::vector<MeijerFixture> out;
    const std::array<std::array<double, 2>, 5> shapes{
        {{1.3, 0.45}, {2.7, 1.15}, {4.05, 2.6}, {0.85, 3.4}, {6.3, 1.9}}};
    const std::array<double, 5> z_cdf{0.03, 0.4, 1.7, 6.5, 18.0};
    for (const auto& s : shapes)
        for (double z : z_cdf)
            out.push_back({cdf_instance(s[0], s[1]), z});
    const std::array<double, 5> zetas{2.35, 0.7, 5.15, 1.45, 9.9};
    const std::array<double, 5> z_e2e{0.08, 0.6, 2.2, 9.0, 35.0};
    for (std::size_t i = 0; i < shapes.size(); ++i)
        for (double z : z_e2e)
            out.push_back({e2e_instance(shapes[i][0], shapes[i][1], zetas[i]), z});
    return out;
}

struct E2eFixture
{
    cascade::GKFit fit;
    pointing::PointingStats stats;
};

inline cascade::GKFit make_fit(double k, double m, double Xi)
{
    cascade::GKFit f;
    f.k_A = k;
    f.m_A = m;
    f.Xi = Xi;
    f.Omega_A = k * m / (Xi * Xi);
    return f;
}

inline pointing::PointingStats make_stats(double B_o, double zeta)
{
    pointing::PointingStats s;
    s.B_o = B_o;
    s.zeta = zeta;
    return s;
}

inline std::vector<E2eFixture> e2e_fixtures()
{
    return {{make_fit(3.2, 1.7, 0.9), make_stats(0.8, 2.5)},
            {make_fit(12.4, 5.6, 0.35), make_stats(0.55, 7.3)},
            {make_fit(1.4, 0.9, 1.6), make_stats(0.93, 0.8)}};
}

// Xi^2 A^2 is a product of unit-scale Gamma(k) and Gamma(m) variates, so
// F_A(x) = E_Y[P(k, Xi^2 x^2 / Y)] with Y ~ Gamma(m). Integrating over
// s = ln y removes the endpoint singularity when m < 1.
inline double cdf_A_mixture(const cascade::GKFit& fit, double x)
{
    if (x <= 0.0)
        return 0.0;
    const double t = fit.Xi * fit.Xi * x * x;
    const double m = fit.m_A;
    const double log_norm = std::lgamma(m);
    auto integrand = [&](double s) {
        const double w = std::exp(m * s - std::exp(s) - log_norm);
        return w * boost::math::gamma_p(fit.k_A, t * std::exp(-s));
    };
    const double s_lo = std::min(std::log(t), 0.0) - 45.0 / m;
    const double s_hi = std::log(m + 40.0 * std::sqrt(m) + 40.0);
    const int pieces = static_cast<int>(std::ceil((s_hi - s_lo) / 1.5));
    const double width = (s_hi - s_lo) / pieces;
    double total = 0.0;
    for (int i = 0; i < pieces; ++i)
    {
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            integrand, s_lo + i * width, s_lo + (i + 1) * width, 6, 1e-14, &err);
    }
    return total;
}

// F_{A_e2e}(x) = int_0^{B_o} F_A(x/y) f_{h_g}(y) dy. With y = B_o e^(-v/zeta)
// the weight becomes e^(-v) dv on (0, inf).
inline double cdf_e2e_quadrature(const cascade::GKFit& fit, const pointing::PointingStats& stats,
                                 double x)
{
    auto integrand = [&](double v) {
        return std::exp(-v) * cdf_A_mixture(fit, x * std::exp(v / stats.zeta) / stats.B_o);
    };
    constexpr double kTail = 40.0;
    constexpr int kPieces = 16;
    double total = 0.0;
    for (int i = 0; i < kPieces; ++i)
    {
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            integrand, kTail * i / kPieces, kTail * (i + 1) / kPieces, 6, 1e-13, &err);
    }
    return total + std::exp(-kTail);
}

// Literal nested-sum moments of an N-fold iid sum: N-1 nested indices,
// one binomial per level, N factors of mu_chi.
inline double nested_sum_moment(const cascade::Moments& mu, int N, int l)
{
    std::function<double(int, int)> level = [&](int depth, int upper) -> double {
        if (depth == N - 1)
            return mu[static_cast<std::size_t>(upper)];
        double s = 0.0;
        for (int next = 0; next <= upper; ++next)
        {
            double binom = 1.0;
            for (int i = 1; i <= next; ++i)
                binom = binom * (upper - next + i) / i;
            s += binom * mu[static_cast<std::size_t>(upper - next)] * level(depth + 1, next);
        }
        return s;
    };
    return level(0, l);
}

// x-grid where an e2e CDF moves from about 1e-3 to 0.999.
inline std::vector<double> e2e_grid(const E2eFixture& f, int points)
{
    double lo = 1e-3;
    while (cascade::cdf_A_e2e(f.fit, f.stats, lo) < 1e-3)
        lo *= 1.5;
    double hi = lo;
    while (cascade::cdf_A_e2e(f.fit, f.stats, hi) < 0.999)
        hi *= 1.5;
    std::vector<double> x;
    for (int i = 0; i < points; ++i)
        x.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    return x;
}

} // namespace risuav::testing
