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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "risuav/error.hpp"
#include "risuav/fading.hpp"
#include "risuav/numeric.hpp"
#include "risuav/random.hpp"

using namespace risuav;
using namespace risuav::fading;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
// Rice power is a Poisson(K) mixture of Gamma(k+1, 1/(1+K)) laws, and
// P(k+1, y) = 1 - e^-y sum_{j<=k} y^j / j!.
double rice_cdf_reference(double K, double x)
{
    const double y = (1.0 + K) * x * x;
    double total = 0.0;
    double poisson = std::exp(-K);
    double partial = 0.0;
    double term = std::exp(-y);
    for (int k = 0; k < 400; ++k)
    {
        partial += term;
        total += poisson * (1.0 - partial);
        poisson *= K / (k + 1);
        term *= y / (k + 1);
    }
    return total;
}

double integrate(const std::function<double(double)>& f, double a, double b)
{
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14, &err);
}

double ks_distance(std::vector<double> draws, const EnvelopeModel& model)
{
    std::sort(draws.begin(), draws.end());
    const double n = static_cast<double>(draws.size());
    double d = 0.0;
    for (std::size_t i = 0; i < draws.size(); ++i)
    {
        const double F = envelope_cdf(model, draws[i]);
        d = std::max({d, std::abs(F - i / n), std::abs(F - (i + 1) / n)});
    }
    return d;
}

std::vector<double> draw(const EnvelopeModel& model, std::size_t n, std::uint64_t seed)
{
    EnvelopeSampler sampler(model);
    Philox4x32 engine(seed, 0);
    std::vector<double> out(n);
    for (auto& v : out)
        v = sampler(engine);
    return out;
}
} // namespace

TEST_CASE("Nakagami mixture is a single exact term")
{
    const auto mg = nakagami_to_mg(2.0);
    REQUIRE(mg.terms.size() == 1);
    CHECK_THAT(mg_cdf(mg, 1.0), WithinRel(0.59399415029016192432, 1e-13));
    for (double x : {0.2, 0.9, 1.7})
    {
        CHECK_THAT(mg_pdf(mg, x), WithinRel(nakagami_pdf({2.0}, x), 1e-13));
        CHECK_THAT(mg_cdf(mg, x), WithinRel(nakagami_cdf({2.0}, x), 1e-13));
    }
}

TEST_CASE("Rice mixture coefficients and density")
{
    const double K = std::pow(10.0, 0.5);
    const auto mg = rice_to_mg(K, 20);
    REQUIRE(mg.terms.size() == 20);
    CHECK_THAT(mg.terms.front().a, WithinRel(0.1761859652460656326, 1e-12));
    CHECK_THAT(mg.terms.back().a, WithinRel(2.2032916112081482741e-14, 1e-10));
    CHECK_THAT(mg_pdf(mg, 1.0), WithinRel(1.1728223548193678134, 1e-12));
    CHECK_THAT(rice_pdf({K}, 1.0), WithinRel(1.1728223545794693652, 1e-12));
}

TEST_CASE("mixture normalization is exact for every supported model")
{
    for (double m : {0.5, 1.0, 2.0, 3.7})
        CHECK_THAT(mg_normalization(nakagami_to_mg(m)), WithinAbs(1.0, 1e-12));
    for (double K : {0.0, 1.0, 3.1622776601683795, 10.0, 30.0})
        for (int n : {1, 5, 20, 60})
            CHECK_THAT(mg_normalization(rice_to_mg(K, n)), WithinAbs(1.0, 1e-12));
}

double rice_mg_sup_error(double K, int terms)
{
    const auto mg = rice_to_mg(K, terms);
    double sup = 0.0;
    for (int i = 1; i <= 400; ++i)
    {
        const double x = 0.0075 * i;
        sup = std::max(sup, std::abs(mg_cdf(mg, x) - rice_cdf_reference(K, x)));
    }
    return sup;
}

// Poisson(K) mass beyond the last retained component.
double poisson_tail(double K, int terms)
{
    double p = std::exp(-K);
    double head = 0.0;
    for (int k = 0; k < terms; ++k)
    {
        head += p;
        p *= K / (k + 1);
    }
    return 1.0 - head;
}

TEST_CASE("exact Rice CDF against the Poisson-mixture reference")
{
    for (double K : {0.0, 1.0, 3.1622776601683795, 10.0})
        for (int i = 1; i <= 400; ++i)
        {
            const double x = 0.0075 * i;
            CHECK_THAT(rice_cdf({K}, x), WithinAbs(rice_cdf_reference(K, x), 1e-12));
        }
}

TEST_CASE("mixture CDF tracks the exact Rice CDF")
{
    for (double k_db : {0.0, 3.0, 5.0, 7.5, 9.0})
        CHECK(rice_mg_sup_error(std::pow(10.0, k_db / 10.0), 20) < 1e-3);
    // The 20-term weights are a renormalized Poisson(K) series, so the CDF
    // error is bounded by the discarded Poisson mass. At 10 dB that mass is
    // 3.5e-3 and the error reaches 2.6e-3; more terms close the gap.
    for (double k_db : {5.0, 9.0, 10.0})
    {
        const double K = std::pow(10.0, k_db / 10.0);
        CHECK(rice_mg_sup_error(K, 20) <= poisson_tail(K, 20));
    }
    const double K10 = 10.0;
    CHECK_THAT(rice_mg_sup_error(K10, 20), WithinAbs(2.6295e-3, 2e-6));
    CHECK(rice_mg_sup_error(K10, 25) < 1e-3);
}

TEST_CASE("closed-form moments match numerical integration")
{
    const auto models = {nakagami_to_mg(2.0), nakagami_to_mg(0.7),
                         rice_to_mg(std::pow(10.0, 0.5), 20), rice_to_mg(10.0, 20)};
    for (const auto& mg : models)
    {
        CHECK_THAT(integrate([&](double x) { return mg_pdf(mg, x); }, 0.0, 12.0),
                   WithinAbs(mg_normalization(mg), 1e-10));
        for (int l = 1; l <= 6; ++l)
        {
            const double quad =
                integrate([&](double x) { return std::pow(x, l) * mg_pdf(mg, x); }, 0.0, 12.0);
            CHECK_THAT(mg_moment(mg, l), WithinRel(quad, 1e-8));
        }
    }
}

TEST_CASE("CDF limits and monotonicity")
{
    const auto mg = rice_to_mg(3.0, 20);
    CHECK(mg_cdf(mg, 0.0) == 0.0);
    CHECK_THAT(mg_cdf(mg, 20.0), WithinAbs(1.0, 1e-12));
    double prev = 0.0;
    for (double x = 0.0; x < 5.0; x += 0.01)
    {
        const double v = mg_cdf(mg, x);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("model validation")
{
    MixtureGammaModel bad;
    bad.terms = {{1.0, 1.0}, {-0.2, 2.0}};
    CHECK_NOTHROW(validate(bad));
    CHECK_THROWS_AS(EnvelopeSampler(EnvelopeModel{bad}), DomainError);
    bad.terms = {{1.0, 0.0}};
    CHECK_THROWS_AS(validate(bad), DomainError);
    MixtureGammaModel empty;
    CHECK_THROWS_AS(validate(empty), DomainError);
    CHECK_THROWS_AS(rice_to_mg(3.0, 61), DomainError);
    CHECK_THROWS_AS(rice_to_mg(-1.0, 10), DomainError);
    CHECK_THROWS_AS(nakagami_to_mg(0.4), DomainError);
}

TEST_CASE("Nakagami m = 1 draws have unit mean power")
{
    const auto xs = draw(NakagamiSpec{1.0}, 1'000'000, 7);
    CompensatedSum s;
    for (double x : xs)
        s += x * x;
    CHECK_THAT(s.value() / xs.size(), WithinAbs(1.0, 0.005));
}

TEST_CASE("samplers follow their distributions")
{
    const double K = std::pow(10.0, 0.5);
    CHECK(ks_distance(draw(RiceSpec{K}, 1'000'000, 11), RiceSpec{K}) < 0.002);
    CHECK(ks_distance(draw(rice_to_mg(K, 20), 1'000'000, 12), rice_to_mg(K, 20)) < 0.002);
    CHECK(ks_distance(draw(NakagamiSpec{2.0}, 1'000'000, 13), NakagamiSpec{2.0}) < 0.002);
}

TEST_CASE("sample moments fall within three standard errors")
{
    const auto mg = rice_to_mg(std::pow(10.0, 0.5), 20);
    const auto xs = draw(mg, 400'000, 21);
    for (int l = 1; l <= 4; ++l)
    {
        CompensatedSum s;
        CompensatedSum s2;
        for (double x : xs)
        {
            const double p = std::pow(x, l);
            s += p;
            s2 += p * p;
        }
        const double n = static_cast<double>(xs.size());
        const double mean = s.value() / n;
        const double se = std::sqrt((s2.value() / n - mean * mean) / n);
        CHECK(std::abs(mean - mg_moment(mg, l)) <= 3.0 * se);
    }
}

TEST_CASE("sampling is reproducible for a fixed seed and stream")
{
    CHECK(draw(RiceSpec{2.0}, 1000, 5) == draw(RiceSpec{2.0}, 1000, 5));
    CHECK(draw(RiceSpec{2.0}, 1000, 5) != draw(RiceSpec{2.0}, 1000, 6));
}

TEST_CASE("Philox known-answer vectors")
{
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::generate(C{0, 0, 0, 0}, {0, 0}) ==
          C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                               {0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                               {0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}
