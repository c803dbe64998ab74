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

#include <complex>
#include <span>

namespace risuav::specfun
{
/// Gamma function for real x. Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// ln|Gamma(x)|. Reentrant (does not touch the global `signgam`).
double log_gamma(double x);

/// Principal-ish log Gamma for complex z, valid up to multiples of 2*pi*i in
/// the imaginary part, which is all callers need since they exponentiate.
/// Throws PoleError when z is a non-positive integer.
std::complex<double> log_gamma(std::complex<double> z);

/// 1/Gamma(x), returning exactly 0 at the poles of Gamma.
double rgamma(double x);

double erf_fn(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Modified Bessel function of the second kind, real order |nu| <= 50, x > 0.
double bessel_k(double nu, double x);

struct PfqResult
{
    double value = 0.0;
    double abs_sum = 0.0; // sum of |term|, for cancellation estimates
    int terms = 0;
};

/// Generalized hypergeometric series pFq(a; b; z) by direct summation with
/// compensated accumulation. Requires p <= q, or p == q + 1 with |z| < 1,
/// unless some a_i is a non-positive integer (terminating series).
double pfq(std::span<const double> a, std::span<const double> b, double z);
PfqResult pfq_detailed(std::span<const double> a, std::span<const double> b, double z);

} // namespace risuav::specfun
