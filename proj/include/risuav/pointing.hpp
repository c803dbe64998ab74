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

#include <cmath>
#include <numbers>
#include <random>

namespace risuav::pointing
{
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Pose and optics of the RIS-UAV hop. Lengths share one unit (meters by
/// default); `c` and `Cn2` must be expressed in that same unit.
struct PointingGeometry
{
    double f = 100e9;                             // carrier frequency, Hz
    double L2 = 5.0;                              // RIS-UAV distance
    double w_o = 1e-3;                            // beam waist radius
    double theta = -std::numbers::pi / 4.0;       // mean azimuth, rad
    double phi = 4.0 * std::numbers::pi / 3.0;    // mean polar angle, rad
    double sigma_p = 0.05;                        // position jitter std (length)
    double sigma_o = 0.1;                         // orientation jitter std, rad
    double d_x = 0.1;                             // mean x-displacement (length)
    double alpha = 20.65;                         // receive aperture radius
    double Cn2 = 5e-14;                           // refraction structure parameter
    double c = kSpeedOfLight;                     // propagation speed
};

void validate(const PointingGeometry& geom);

struct PrincipalFactors
{
    double rho_y = 0.0;
    double rho_z = 0.0;
    double rho_yz = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
};

/// Curvature factors of the beam footprint. Throws DegenerateError when the
/// beam runs parallel to the aperture.
PrincipalFactors principal_factors(double theta, double phi);

double wave_number(const PointingGeometry& geom);
double coherence_length(const PointingGeometry& geom);
double beamwidth(const PointingGeometry& geom);

struct PointingStats
{
    double B_o = 1.0;  // collected fraction at perfect alignment
    double zeta = 1.0; // power-law exponent of h_g
    double w_L2 = 0.0;
    double rho_min = 0.0;
    double rho_max = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    double k_min = 0.0;
    double k_max = 0.0;
    double k_m = 0.0;
};

/// Throws DegenerateError when there is no jitter. A finite jitter with an
/// aperture far wider than the beam can still give zeta = +inf, meaning h_g
/// sits at B_o almost surely.
PointingStats pointing_stats(const PointingGeometry& geom);

double hg_pdf(const PointingStats& stats, double x);
double hg_cdf(const PointingStats& stats, double x);

/// h_g = B_o U^(1/zeta).
template <class Engine>
double hg_sample(const PointingStats& stats, Engine& engine)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return stats.B_o * std::pow(u(engine), 1.0 / stats.zeta);
}

} // namespace risuav::pointing
