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

#include "risuav/pointing.hpp"

#include <limits>
#include <string>

#include "risuav/error.hpp"
#include "risuav/specfun.hpp"

namespace risuav::pointing
{
namespace
{
void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string("pointing geometry: ") + name + " must be positive");
}

void require_nonnegative(double v, const char* name)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw DomainError(std::string("pointing geometry: ") + name + " must be non-negative");
}
} // namespace

void validate(const PointingGeometry& geom)
{
    require_positive(geom.f, "f");
    require_positive(geom.L2, "L2");
    require_positive(geom.w_o, "w_o");
    require_positive(geom.alpha, "alpha");
    require_positive(geom.Cn2, "Cn2");
    require_positive(geom.c, "c");
    require_nonnegative(geom.sigma_p, "sigma_p");
    require_nonnegative(geom.sigma_o, "sigma_o");
    if (!std::isfinite(geom.d_x))
        throw DomainError("pointing geometry: d_x must be finite");
    if (!std::isfinite(geom.theta) || !std::isfinite(geom.phi))
        throw DomainError("pointing geometry: angles must be finite");
}

PrincipalFactors principal_factors(double theta, double phi)
{
    PrincipalFactors r;
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const double ct = std::cos(theta);
    r.rho_y = cp * cp + sp * sp * ct * ct;
    r.rho_z = sp * sp;
    r.rho_yz = -cp * sp * std::sin(theta);
    const double root = std::sqrt((r.rho_y - r.rho_z) * (r.rho_y - r.rho_z) + 4.0 * r.rho_yz * r.rho_yz);
    const double lower = r.rho_y + r.rho_z - root;
    if (!(lower > 1e-12))
        throw DegenerateError("principal_factors: beam is parallel to the receive aperture");
    r.rho_min = 2.0 / (r.rho_y + r.rho_z + root);
    r.rho_max = 2.0 / lower;
    return r;
}

double wave_number(const PointingGeometry& geom)
{
    return 2.0 * std::numbers::pi * geom.f / geom.c;
}

double coherence_length(const PointingGeometry& geom)
{
    const double k = wave_number(geom);
    return std::pow(0.55 * geom.Cn2 * k * k * geom.L2, -0.6);
}

double beamwidth(const PointingGeometry& geom)
{
    validate(geom);
    const double rho = coherence_length(geom);
    const double w2 = geom.w_o * geom.w_o;
    const double spread = geom.c * geom.L2 / (std::numbers::pi * geom.f * w2);
    return geom.w_o * std::sqrt(1.0 + (1.0 + 2.0 * w2 / (rho * rho)) * spread * spread);
}

PointingStats pointing_stats(const PointingGeometry& geom)
{
    validate(geom);
    const double jitter =
        4.0 * geom.sigma_p * geom.sigma_p + 4.0 * geom.d_x * geom.d_x * geom.sigma_o * geom.sigma_o;
    if (!(jitter > 0.0))
        throw DegenerateError(
            "pointing_stats: 4 sigma_p^2 + 4 d_x^2 sigma_o^2 is zero, zeta is unbounded; "
            "use the no-misalignment analysis instead");

    const PrincipalFactors pf = principal_factors(geom.theta, geom.phi);
    PointingStats s;
    s.w_L2 = beamwidth(geom);
    s.rho_min = pf.rho_min;
    s.rho_max = pf.rho_max;

    auto v_of = [&](double rho) {
        return geom.alpha / s.w_L2 * std::sqrt(std::numbers::pi / (2.0 * rho));
    };
    // sqrt(pi) rho erf(v) / (2 v exp(-v^2)); the exponential is folded in to
    // stay finite for apertures much wider than the beam.
    auto k_of = [](double rho, double v) {
        return std::sqrt(std::numbers::pi) * rho * specfun::erf_fn(v) * std::exp(v * v) / (2.0 * v);
    };
    s.v_min = v_of(s.rho_min);
    s.v_max = v_of(s.rho_max);
    s.B_o = specfun::erf_fn(s.v_min) * specfun::erf_fn(s.v_max);
    s.k_min = k_of(s.rho_min, s.v_min);
    s.k_max = k_of(s.rho_max, s.v_max);
    s.k_m = 0.5 * (s.k_min + s.k_max);
    s.zeta = s.k_m * s.w_L2 * s.w_L2 / jitter;
    // zeta overflows to +inf when the aperture dwarfs the beam; h_g is then
    // pinned at B_o and the distribution functions below handle that limit.
    if (!(s.B_o > 0.0) || !(s.zeta > 0.0))
        throw DegenerateError("pointing_stats: geometry yields no usable misalignment statistics");
    return s;
}

double hg_pdf(const PointingStats& stats, double x)
{
    if (!(x >= 0.0 && x <= stats.B_o))
        throw DomainError("hg_pdf: argument outside [0, B_o]");
    if (std::isinf(stats.zeta))
        return x < stats.B_o ? 0.0 : std::numeric_limits<double>::infinity();
    return stats.zeta / stats.B_o * std::pow(x / stats.B_o, stats.zeta - 1.0);
}

double hg_cdf(const PointingStats& stats, double x)
{
    if (!(x >= 0.0 && x <= stats.B_o))
        throw DomainError("hg_cdf: argument outside [0, B_o]");
    if (std::isinf(stats.zeta))
        return x < stats.B_o ? 0.0 : 1.0;
    return std::pow(x / stats.B_o, stats.zeta);
}

} // namespace risuav::pointing
