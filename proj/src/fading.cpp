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

#include "risuav/fading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/distributions/non_central_chi_squared.hpp>

#include "risuav/error.hpp"
#include "risuav/numeric.hpp"
#include "risuav/specfun.hpp"

namespace risuav::fading
{
namespace
{
void require_nonnegative(double x, const char* what)
{
    if (!(x >= 0.0))
        throw DomainError(std::string(what) + ": envelope must be non-negative");
}

// exp(-z) I_0(z) without overflow.
double scaled_bessel_i0(double z)
{
    if (z < 500.0)
        return std::cyl_bessel_i(0.0, z) * std::exp(-z);
    const double r = 1.0 / (8.0 * z);
    return (1.0 + r * (1.0 + 4.5 * r * (1.0 + 25.0 / 3.0 * r))) /
           std::sqrt(2.0 * std::numbers::pi * z);
}
} // namespace

void validate(const MixtureGammaModel& model)
{
    if (model.terms.empty())
        throw DomainError("mixture-gamma model has no terms");
    if (!(model.c > 0.0) || !std::isfinite(model.c))
        throw DomainError("mixture-gamma rate c must be positive");
    for (const auto& t : model.terms)
    {
        if (!(t.b > 0.0) || !std::isfinite(t.b))
            throw DomainError("mixture-gamma shape b must be positive");
        if (!std::isfinite(t.a))
            throw DomainError("mixture-gamma weight must be finite");
    }
}

double mg_normalization(const MixtureGammaModel& model) { return mg_moment(model, 0.0); }

double mg_pdf(const MixtureGammaModel& model, double x)
{
    require_nonnegative(x, "mg_pdf");
    CompensatedSum s;
    const double e = std::exp(-model.c * x * x);
    for (const auto& t : model.terms)
        s += 2.0 * t.a * std::pow(x, 2.0 * t.b - 1.0) * e;
    return s.value();
}

double mg_cdf(const MixtureGammaModel& model, double x)
{
    require_nonnegative(x, "mg_cdf");
    if (x == 0.0)
        return 0.0;
    CompensatedSum s;
    const double y = model.c * x * x;
    for (const auto& t : model.terms)
        s += t.a * std::exp(specfun::log_gamma(t.b) - t.b * std::log(model.c)) *
             specfun::gamma_p(t.b, y);
    return s.value();
}

double mg_moment(const MixtureGammaModel& model, double l)
{
    CompensatedSum s;
    for (const auto& t : model.terms)
    {
        const double shape = t.b + 0.5 * l;
        if (!(shape > 0.0))
            throw DomainError("mg_moment: moment order too negative for this model");
        s += t.a * std::exp(specfun::log_gamma(shape) - shape * std::log(model.c));
    }
    return s.value();
}

MixtureGammaModel nakagami_to_mg(double m)
{
    if (!(m >= 0.5) || !std::isfinite(m))
        throw DomainError("nakagami_to_mg: shape m must be >= 0.5");
    const double a = std::exp(m * std::log(m) - specfun::log_gamma(m));
    return {{{a, m}}, m, "nakagami"};
}

MixtureGammaModel rice_to_mg(double k_factor, int terms)
{
    if (!(k_factor >= 0.0) || !std::isfinite(k_factor))
        throw DomainError("rice_to_mg: Rice factor must be non-negative");
    if (terms < 1)
        throw DomainError("rice_to_mg: need at least one term");
    if (terms > 60)
        throw DomainError("rice_to_mg: more than 60 terms overflows the weights");

    const double c = 1.0 + k_factor;
    MixtureGammaModel model;
    model.c = c;
    model.label = "rice";
    std::vector<double> log_delta(static_cast<std::size_t>(terms));
    CompensatedSum norm;
    for (int k = 1; k <= terms; ++k)
    {
        // ln delta(K, k) = (k-1) ln K + k ln(1+K) - K - 2 ln (k-1)!
        double ld = k * std::log(c) - k_factor - 2.0 * specfun::log_gamma(k);
        if (k > 1)
            ld += (k_factor > 0.0) ? (k - 1) * std::log(k_factor)
                                    : -std::numeric_limits<double>::infinity();
        log_delta[static_cast<std::size_t>(k - 1)] = ld;
        norm += std::exp(ld + specfun::log_gamma(k) - k * std::log(c));
    }
    for (int k = 1; k <= terms; ++k)
    {
        const double a = std::exp(log_delta[static_cast<std::size_t>(k - 1)]) / norm.value();
        model.terms.push_back({a, static_cast<double>(k)});
    }
    return model;
}

double nakagami_pdf(const NakagamiSpec& spec, double x)
{
    return mg_pdf(nakagami_to_mg(spec.m), x);
}

double nakagami_cdf(const NakagamiSpec& spec, double x)
{
    require_nonnegative(x, "nakagami_cdf");
    return specfun::gamma_p(spec.m, spec.m * x * x);
}

double rice_pdf(const RiceSpec& spec, double x)
{
    require_nonnegative(x, "rice_pdf");
    const double K = spec.k_factor;
    const double z = 2.0 * x * std::sqrt(K * (1.0 + K));
    return 2.0 * (1.0 + K) * x * std::exp(-K - (1.0 + K) * x * x + z) * scaled_bessel_i0(z);
}

double rice_cdf(const RiceSpec& spec, double x)
{
    require_nonnegative(x, "rice_cdf");
    if (x == 0.0)
        return 0.0;
    // 2(1+K) R^2 is non-central chi-square with 2 degrees of freedom.
    const double y = 2.0 * (1.0 + spec.k_factor) * x * x;
    if (spec.k_factor == 0.0)
        return -std::expm1(-0.5 * y);
    boost::math::non_central_chi_squared dist(2.0, 2.0 * spec.k_factor);
    return boost::math::cdf(dist, y);
}

double envelope_cdf(const EnvelopeModel& model, double x)
{
    struct Visitor
    {
        double x;
        double operator()(const MixtureGammaModel& m) const { return mg_cdf(m, x); }
        double operator()(const NakagamiSpec& s) const { return nakagami_cdf(s, x); }
        double operator()(const RiceSpec& s) const { return rice_cdf(s, x); }
    };
    return std::visit(Visitor{x}, model);
}

EnvelopeSampler::EnvelopeSampler(EnvelopeModel model) : model_(std::move(model))
{
    if (const auto* mg = std::get_if<MixtureGammaModel>(&model_))
    {
        validate(*mg);
        CompensatedSum acc;
        for (const auto& t : mg->terms)
        {
            if (!(t.a > 0.0))
                throw DomainError("mg_sample: mixture weights must be positive to sample");
            acc += t.a * std::exp(specfun::log_gamma(t.b) - t.b * std::log(mg->c));
            cumulative_.push_back(acc.value());
        }
        for (double& w : cumulative_)
            w /= acc.value();
        cumulative_.back() = 1.0;
    }
    else if (const auto* n = std::get_if<NakagamiSpec>(&model_))
    {
        if (!(n->m >= 0.5))
            throw DomainError("Nakagami shape must be >= 0.5");
    }
    else if (const auto* r = std::get_if<RiceSpec>(&model_))
    {
        if (!(r->k_factor >= 0.0) || !std::isfinite(r->k_factor))
            throw DomainError("Rice factor must be non-negative");
    }
}

} // namespace risuav::fading
