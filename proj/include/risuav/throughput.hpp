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

#include <optional>

#include "risuav/cascade.hpp"
#include "risuav/pointing.hpp"

namespace risuav::throughput
{
/// Spreading-loss description from which the normalized SNR can be derived:
/// h_l = l1 L1^(-n1/2) l2 L2^(-n2/2), gamma = h_l^2 P_s / sigma_w^2.
struct PathLoss
{
    double l1 = 1.0;
    double l2 = 1.0;
    double n1 = 2.0;
    double n2 = 2.0;
    double L1 = 10.0;
    double L2 = 5.0;
    double P_s = 1.0;
    double sigma_w2 = 1.0;
};

double spreading_loss(const PathLoss& pl);
double gamma_from_path_loss(const PathLoss& pl); // linear

struct LinkBudget
{
    double gamma_db = -5.0; // normalized SNR
    double kappa_t = 0.0;   // transmitter error-vector magnitude
    double kappa_r = 0.0;   // receiver error-vector magnitude

    double gamma() const;          // linear
    double distortion() const;     // kappa_t^2 + kappa_r^2
};

void validate(const LinkBudget& budget);

/// A^2 / ((kappa_t^2 + kappa_r^2) A^2 + 1/gamma).
double sdnr(double A, const LinkBudget& budget);

/// Rate ceiling log2(1 + 1/(kappa_t^2 + kappa_r^2)); +inf for ideal hardware.
double max_rth(double kappa_t, double kappa_r);

/// Smallest gain that supports r_th, i.e. log2(1 + sdnr(A)) > r_th iff A > x*.
/// Returns +inf at or beyond the ceiling.
double gain_threshold(double r_th, const LinkBudget& budget);

/// r_th (1 - F_A(x*)).
double throughput_wo(double r_th, const LinkBudget& budget, const cascade::GKFit& fit,
                     const specfun::MeijerGOptions& options = {});

/// r_th (1 - F_{A_e2e}(x*)).
double throughput_w(double r_th, const LinkBudget& budget, const cascade::GKFit& fit,
                    const pointing::PointingStats& stats,
                    const specfun::MeijerGOptions& options = {});

/// Dispatches on the presence of misalignment statistics.
double throughput(double r_th, const LinkBudget& budget, const cascade::GKFit& fit,
                  const std::optional<pointing::PointingStats>& stats,
                  const specfun::MeijerGOptions& options = {});

} // namespace risuav::throughput
