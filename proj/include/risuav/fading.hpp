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
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace risuav::fading
{
struct MixtureGammaTerm
{
    double a; // weight coefficient
    double b; // shape
};

/// Envelope density f(x) = sum_j 2 a_j x^(2 b_j - 1) exp(-c x^2).
struct MixtureGammaModel
{
    std::vector<MixtureGammaTerm> terms;
    double c = 1.0; // shared rate
    std::string label;
};

/// Checks shapes and rate; throws DomainError.
void validate(const MixtureGammaModel& model);

/// sum_j a_j Gamma(b_j) c^(-b_j); 1 for a proper model.
double mg_normalization(const MixtureGammaModel& model);

double mg_pdf(const MixtureGammaModel& model, double x);
double mg_cdf(const MixtureGammaModel& model, double x);

/// E[X^l] for real l > -2 min(b_j).
double mg_moment(const MixtureGammaModel& model, double l);

/// Nakagami-m with unit spread as a one-term mixture.
MixtureGammaModel nakagami_to_mg(double m);

/// Rice with linear factor k_factor, unit spread, truncated to `terms`
/// components (at most 60) and renormalized.
MixtureGammaModel rice_to_mg(double k_factor, int terms = 20);

// Exact envelope distributions, unit mean-square.
struct NakagamiSpec
{
    double m = 1.0;
};

struct RiceSpec
{
    double k_factor = 0.0; // linear
};

double nakagami_pdf(const NakagamiSpec& spec, double x);
double nakagami_cdf(const NakagamiSpec& spec, double x);
double rice_pdf(const RiceSpec& spec, double x);
double rice_cdf(const RiceSpec& spec, double x);

using EnvelopeModel = std::variant<MixtureGammaModel, NakagamiSpec, RiceSpec>;

double envelope_cdf(const EnvelopeModel& model, double x);

/// Draws envelopes from any EnvelopeModel. Construction does the validation
/// and precomputes component weights; sampling is const and thread-safe as
/// long as each thread brings its own engine.
class EnvelopeSampler
{
  public:
    explicit EnvelopeSampler(EnvelopeModel model);

    template <class Engine>
    double operator()(Engine& engine) const
    {
        return std::visit([&](const auto& m) { return draw(m, engine); }, model_);
    }

    const EnvelopeModel& model() const { return model_; }

  private:
    template <class Engine>
    double draw(const MixtureGammaModel& m, Engine& engine) const
    {
        std::size_t j = 0;
        if (m.terms.size() > 1)
        {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double v = u(engine);
            while (j + 1 < cumulative_.size() && v >= cumulative_[j])
                ++j;
        }
        std::gamma_distribution<double> g(m.terms[j].b, 1.0 / m.c);
        return std::sqrt(g(engine));
    }

    template <class Engine>
    double draw(const NakagamiSpec& s, Engine& engine) const
    {
        std::gamma_distribution<double> g(s.m, 1.0 / s.m);
        return std::sqrt(g(engine));
    }

    // |nu + sigma (X + iY)| with 2 sigma^2 + nu^2 = 1, nu^2 / (2 sigma^2) = K.
    template <class Engine>
    double draw(const RiceSpec& s, Engine& engine) const
    {
        const double sigma = std::sqrt(0.5 / (1.0 + s.k_factor));
        const double nu = std::sqrt(s.k_factor / (1.0 + s.k_factor));
        std::normal_distribution<double> n(0.0, 1.0);
        const double x = nu + sigma * n(engine);
        const double y = sigma * n(engine);
        return std::hypot(x, y);
    }

    EnvelopeModel model_;
    std::vector<double> cumulative_; // mixture component CDF
};

} // namespace risuav::fading
