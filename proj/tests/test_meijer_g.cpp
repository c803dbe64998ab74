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
#include <cmath>

#include "fixtures.hpp"
#include "risuav/error.hpp"
#include "risuav/meijer_g.hpp"
#include "risuav/specfun.hpp"

using namespace risuav;
using namespace risuav::specfun;
using Catch::Matchers::WithinRel;

namespace
{
MeijerGOptions with_backend(MeijerGBackend b)
{
    MeijerGOptions o;
    o.backend = b;
    return o;
}

const MeijerGOptions kSlater = with_backend(MeijerGBackend::Slater);
const MeijerGOptions kContour = with_backend(MeijerGBackend::MellinBarnes);
} // namespace

TEST_CASE("elementary reductions")
{
    const MeijerGSpec exp_spec{1, 0, {}, {0.0}};
    for (double z : {0.1, 1.0, 4.5})
    {
        CHECK_THAT(meijer_g(exp_spec, z, kSlater), WithinRel(std::exp(-z), 1e-13));
        CHECK_THAT(meijer_g(exp_spec, z, kContour), WithinRel(std::exp(-z), 1e-10));
    }
    // G^{2,0}_{0,2}(z | nu/2, -nu/2) = 2 K_nu(2 sqrt z)
    const MeijerGSpec k_spec{2, 0, {}, {0.2, -0.2}};
    CHECK_THAT(meijer_g(k_spec, 1.3), WithinRel(0.166927780059416532701777522479, 1e-11));
    for (double z : {0.2, 2.0, 9.0})
    {
        const double expected = 2.0 * bessel_k(0.4, 2.0 * std::sqrt(z));
        // The residue series cancels like e^(2 sqrt z) as z grows.
        const auto s = meijer_g_evaluate(k_spec, z, kSlater);
        CHECK_THAT(s.value, WithinRel(expected, std::max(1e-12, 10.0 * s.error_estimate)));
        CHECK_THAT(meijer_g(k_spec, z, kContour), WithinRel(expected, 1e-10));
    }
}

TEST_CASE("CDF-shaped instance against reference values")
{
    const MeijerGSpec spec{2, 1, {1.0}, {1.8, 0.6, 0.0}};
    CHECK_THAT(meijer_g(spec, 0.7, kSlater), WithinRel(0.86711226816963387436, 1e-12));
    CHECK_THAT(meijer_g(spec, 0.7, kContour), WithinRel(0.86711226816963387436, 1e-12));

    const MeijerGSpec wide{2, 1, {1.0}, {56.947, 20.341, 0.0}};
    CHECK_THAT(meijer_g(wide, 1000.0), WithinRel(6.2458862874213998e91, 1e-11));
}

TEST_CASE("end-to-end instance against a reference value")
{
    const auto spec = testing::e2e_instance(2.7, 1.15, 0.7);
    CHECK_THAT(meijer_g(spec, 2.0, kSlater), WithinRel(2.76106552080200451046960996972, 1e-11));
    CHECK_THAT(meijer_g(spec, 2.0, kContour), WithinRel(2.76106552080200451046960996972, 1e-11));
}

TEST_CASE("backends agree on the fixture grid")
{
    const auto grid = testing::meijer_grid();
    REQUIRE(grid.size() == 50);
    for (const auto& f : grid)
    {
        const auto s = meijer_g_evaluate(f.spec, f.z, kSlater);
        const auto c = meijer_g_evaluate(f.spec, f.z, kContour);
        CHECK(s.backend == MeijerGBackend::Slater);
        CHECK(c.backend == MeijerGBackend::MellinBarnes);
        CHECK_FALSE(s.perturbed);
        CHECK_THAT(s.value, WithinRel(c.value, 1e-8));
    }
}

TEST_CASE("automatic selection stays close to the contour value")
{
    for (const auto& f : testing::meijer_grid())
    {
        const double ref = meijer_g(f.spec, f.z, kContour);
        CHECK_THAT(meijer_g(f.spec, f.z), WithinRel(ref, 1e-10));
    }
}

TEST_CASE("cross-check mode")
{
    MeijerGOptions o;
    o.cross_check = true;
    const MeijerGSpec spec{2, 1, {1.0}, {1.8, 0.6, 0.0}};
    CHECK_THAT(meijer_g(spec, 0.7, o), WithinRel(0.86711226816963387436, 1e-12));
}

TEST_CASE("integer-spaced lower parameters")
{
    const MeijerGSpec spec{2, 1, {1.0}, {3.0, 2.0, 0.0}};
    constexpr double kReference = 0.619157519067099947662553898455;

    MeijerGOptions strict = kSlater;
    strict.strict_poles = true;
    CHECK_THROWS_AS(meijer_g(spec, 2.5, strict), PoleError);

    const auto split = meijer_g_evaluate(spec, 2.5, kSlater);
    CHECK(split.perturbed);
    CHECK_THAT(split.value, WithinRel(kReference, 1e-6));

    CHECK_THAT(meijer_g(spec, 2.5), WithinRel(kReference, 1e-11));
    CHECK_THAT(meijer_g(spec, 2.5, kContour), WithinRel(kReference, 1e-11));
}

TEST_CASE("CDF instance rises monotonically to one")
{
    for (auto [k, m] : {std::pair{1.3, 0.45}, std::pair{4.05, 2.6}, std::pair{12.0, 5.5}})
    {
        const double norm = std::exp(-std::lgamma(k) - std::lgamma(m));
        const auto spec = testing::cdf_instance(k, m);
        double prev = 0.0;
        for (double z = 1e-3; z < 1e5; z *= 1.4)
        {
            const double v = meijer_g(spec, z) * norm;
            CHECK(v >= prev - 1e-12);
            CHECK(v <= 1.0 + 1e-10);
            prev = v;
        }
        CHECK_THAT(prev, WithinRel(1.0, 1e-8));
    }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(validate({4, 0, {}, {1.0, 2.0, 3.0}}), DomainError);
    CHECK_THROWS_AS(validate({1, 2, {1.0}, {0.5}}), DomainError);
    CHECK_THROWS_AS(validate({1, 0, std::vector<double>(9, 0.5), {0.1}}), DomainError);
    CHECK_THROWS_AS(validate({1, 1, {2.5}, {0.5}}), PoleError);
    CHECK_THROWS_AS(validate({1, 1, {NAN}, {0.5}}), DomainError);
    CHECK_NOTHROW(validate({2, 1, {1.0}, {1.8, 0.6, 0.0}}));
    CHECK(to_string(MeijerGBackend::MellinBarnes) == "mellin-barnes");
}
