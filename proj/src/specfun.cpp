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

#include "risuav/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "risuav/error.hpp"
#include "risuav/numeric.hpp"

namespace risuav::specfun
{
namespace
{
bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Stirling tail sum_k B_2k / (2k (2k-1) z^(2k-1)), accurate to ~1e-17 once
// |z| >= 10 away from the negative real axis.
template <class T>
T stirling_tail(T z)
{
    constexpr double coef[] = {1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0,
                               -1.0 / 1680.0,       1.0 / 1188.0,   -691.0 / 360360.0,
                               1.0 / 156.0,         -3617.0 / 122400.0};
    const T inv = T(1.0) / z;
    const T inv2 = inv * inv;
    T acc = T(coef[7]);
    for (int k = 6; k >= 0; --k)
        acc = acc * inv2 + T(coef[k]);
    return acc * inv;
}

constexpr double kShiftTarget = 10.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178; // ln(2 pi)/2
} // namespace

double gamma_fn(double x)
{
    if (std::isnan(x))
        return x;
    if (is_nonpositive_integer(x))
        throw PoleError("gamma_fn: pole at non-positive integer x = " + std::to_string(x));
    return std::tgamma(x);
}

double log_gamma(double x)
{
    if (is_nonpositive_integer(x))
        throw PoleError("log_gamma: pole at non-positive integer x = " + std::to_string(x));
    if (x < 0.5)
    {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        // Reduce to [-1/2, 1/2] first; x - round(x) is exact, so poles are
        // approached without the rounding of pi * x.
        const double s = std::abs(std::sin(std::numbers::pi * (x - std::round(x))));
        return std::log(std::numbers::pi / s) - log_gamma(1.0 - x);
    }
    double shift = 0.0;
    while (x < kShiftTarget)
    {
        shift += std::log(x);
        x += 1.0;
    }
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_tail(x) - shift;
}

std::complex<double> log_gamma(std::complex<double> z)
{
    if (z.imag() == 0.0)
    {
        if (is_nonpositive_integer(z.real()))
            throw PoleError("log_gamma: pole at non-positive integer z = " +
                            std::to_string(z.real()));
        if (z.real() > 0.0)
            return {log_gamma(z.real()), 0.0};
    }
    // Upward recurrence until the Stirling series is accurate. Works for any
    // non-pole z, including Re(z) < 0, without a complex reflection formula.
    std::complex<double> shift = 0.0;
    std::complex<double> prod = 1.0;
    while (z.real() < kShiftTarget && !(z.real() >= 0.0 && std::abs(z.imag()) >= kShiftTarget))
    {
        prod *= z;
        if (std::abs(prod) > 1e150 || std::abs(prod) < 1e-150)
        {
            shift += std::log(prod);
            prod = 1.0;
        }
        z += 1.0;
    }
    shift += std::log(prod);
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + stirling_tail(z) - shift;
}

double rgamma(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    return 1.0 / std::tgamma(x);
}

double erf_fn(double x) { return std::erf(x); }

double gamma_p(double a, double x)
{
    if (!(a > 0.0))
        throw DomainError("gamma_p: shape must be positive");
    if (!(x >= 0.0))
        throw DomainError("gamma_p: argument must be non-negative");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    return boost::math::gamma_p(a, x);
}

double bessel_k(double nu, double x)
{
    if (!(x > 0.0))
        throw DomainError("bessel_k: argument must be positive, got " + std::to_string(x));
    if (!(std::abs(nu) <= 50.0))
        throw DomainError("bessel_k: |order| must not exceed 50");
    return std::cyl_bessel_k(std::abs(nu), x);
}

PfqResult pfq_detailed(std::span<const double> a, std::span<const double> b, double z)
{
    // Index of the last non-zero term when some a_i is a non-positive integer.
    long terminate_at = std::numeric_limits<long>::max();
    for (double ai : a)
        if (is_nonpositive_integer(ai))
            terminate_at = std::min(terminate_at, static_cast<long>(-ai));
    const bool terminating = terminate_at != std::numeric_limits<long>::max();

    for (double bj : b)
        if (is_nonpositive_integer(bj) && static_cast<long>(-bj) < terminate_at)
            throw PoleError("pfq: lower parameter " + std::to_string(bj) +
                            " is a non-positive integer");

    if (!terminating && z != 0.0)
    {
        if (a.size() > b.size() + 1)
            throw ConvergenceError("pfq: series diverges for p > q + 1");
        if (a.size() == b.size() + 1 && std::abs(z) >= 1.0)
            throw ConvergenceError("pfq: series diverges for p = q + 1 and |z| >= 1");
    }

    constexpr int kMaxTerms = 100000;
    constexpr double kTailTol = 1e-15;

    CompensatedSum sum;
    double term = 1.0;
    sum += term;
    int small_run = 0;
    int k = 0;
    for (; k < kMaxTerms; ++k)
    {
        if (terminating && k >= terminate_at)
            break;
        double ratio = z / (k + 1.0);
        for (double ai : a)
            ratio *= ai + k;
        for (double bj : b)
            ratio /= bj + k;
        term *= ratio;
        if (!std::isfinite(term))
            throw ConvergenceError("pfq: term overflow");
        sum += term;
        // Two consecutive negligible terms with a contracting ratio end the
        // summation; a single tiny term can be an accidental near-zero factor.
        if (std::abs(term) <= kTailTol * std::abs(sum.value()) && std::abs(ratio) < 1.0)
        {
            if (++small_run >= 2)
                break;
        }
        else
        {
            small_run = 0;
        }
        if (term == 0.0)
            break;
    }
    if (k == kMaxTerms)
        throw ConvergenceError("pfq: no convergence within 1e5 terms");
    return {sum.value(), sum.abs_sum(), k + 1};
}

double pfq(std::span<const double> a, std::span<const double> b, double z)
{
    return pfq_detailed(a, b, z).value;
}

} // namespace risuav::specfun
