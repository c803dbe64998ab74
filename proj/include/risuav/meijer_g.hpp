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

#include <string>
#include <vector>

namespace risuav::specfun
{
/// Parameters of G^{m,n}_{p,q}(z | a_1..a_p ; b_1..b_q).
struct MeijerGSpec
{
    int m = 0;
    int n = 0;
    std::vector<double> a; // upper parameters, a_1..a_n first
    std::vector<double> b; // lower parameters, b_1..b_m first

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }
};

enum class MeijerGBackend
{
    Automatic,   // Slater when well conditioned, Mellin-Barnes otherwise
    Slater,      // residue series only
    MellinBarnes // contour quadrature only
};

std::string to_string(MeijerGBackend backend);

struct MeijerGOptions
{
    MeijerGBackend backend = MeijerGBackend::Automatic;
    // Integer-spaced lower parameters make the residue series singular. By
    // default they are split by +-epsilon and the two evaluations averaged;
    // strict mode throws PoleError instead.
    bool strict_poles = false;
    double pole_epsilon = 1e-6;
    // Evaluate with both backends and throw ConvergenceError if they disagree
    // by more than cross_check_tolerance (relative).
    bool cross_check = false;
    double cross_check_tolerance = 1e-8;
};

struct MeijerGEvaluation
{
    double value = 0.0;
    MeijerGBackend backend = MeijerGBackend::Automatic; // backend that produced value
    double error_estimate = 0.0; // relative, from cancellation and rounding bookkeeping
    bool perturbed = false;      // epsilon splitting was applied
};

/// Throws DomainError/PoleError when the spec violates its invariants.
void validate(const MeijerGSpec& spec);

/// Meijer G-function for real parameters and z > 0.
double meijer_g(const MeijerGSpec& spec, double z, const MeijerGOptions& options = {});
MeijerGEvaluation meijer_g_evaluate(const MeijerGSpec& spec, double z,
                                    const MeijerGOptions& options = {});

} // namespace risuav::specfun
