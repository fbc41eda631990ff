// SPDX-License-Identifier: Apache-2.0
//
// mmwavesim - statistical mmWave channel simulation and MU-MIMO evaluation
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmwavesim/rng.hpp"
#include "test_util.hpp"

using namespace mmwavesim;

TEST_CASE("identical (seed, stream) reproduces the identical integer sequence")
{
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; i++)
        REQUIRE(a.next_u64() == b.next_u64());

    RngStream c(42, 8);
    bool same = true;
    RngStream a2(42, 7);
    for (int i = 0; i < 64; i++)
        same = same && (a2.next_u64() == c.next_u64());
    CHECK_FALSE(same);
}

TEST_CASE("uniform on a degenerate interval returns the bound")
{
    RngStream rng(1, 0);
    CHECK(rng.uniform(5.0, 5.0) == 5.0);
}

TEST_CASE("uniform stays inside [lo, hi)")
{
    RngStream rng(1, 0);
    for (int i = 0; i < 10000; i++)
    {
        double v = rng.uniform(0.0, 1.0);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("uniform rejects inverted bounds")
{
    RngStream rng(1, 0);
    CHECK_THROWS_AS(rng.uniform(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("uniform mean over 1e6 draws is 0.5 within 0.002")
{
    RngStream rng(3, 0);
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; i++)
        sum += rng.uniform();
    CHECK(std::fabs(sum / n - 0.5) < 0.002);
}

TEST_CASE("poisson sample mean matches at 1.9")
{
    RngStream rng(4, 0);
    const int n = 1000000;
    double sum = 0.0;
    for (int i = 0; i < n; i++)
        sum += static_cast<double>(rng.poisson(1.9));
    CHECK(std::fabs(sum / n - 1.9) < 0.01);
}

TEST_CASE("poisson with tiny mean is almost always zero")
{
    RngStream rng(5, 0);
    int nonzero = 0;
    for (int i = 0; i < 10000; i++)
        nonzero += rng.poisson(0.0001) > 0 ? 1 : 0;
    CHECK(nonzero <= 10);
}

TEST_CASE("poisson variance equals the mean at 2.1")
{
    RngStream rng(6, 0);
    const int n = 1000000;
    std::vector<double> draws(n);
    for (double &d : draws)
        d = static_cast<double>(rng.poisson(2.1));
    CHECK(std::fabs(testutil::variance(draws) - 2.1) < 0.02);
}

TEST_CASE("poisson rejects non-positive mean")
{
    RngStream rng(1, 0);
    CHECK_THROWS_AS(rng.poisson(0.0), std::invalid_argument);
    CHECK_THROWS_AS(rng.poisson(-1.0), std::invalid_argument);
}

TEST_CASE("normal moments")
{
    RngStream rng(7, 0);
    const int n = 400000;
    std::vector<double> draws(n);
    for (double &d : draws)
        d = rng.normal();
    CHECK(std::fabs(testutil::mean(draws)) < 0.01);
    CHECK(std::fabs(testutil::variance(draws) - 1.0) < 0.01);
}

TEST_CASE("exponential mean")
{
    RngStream rng(8, 0);
    const int n = 400000;
    double sum = 0.0;
    for (int i = 0; i < n; i++)
        sum += rng.exponential(3.5);
    CHECK(std::fabs(sum / n - 3.5) < 0.02);
}

TEST_CASE("uniform_int covers the range uniformly")
{
    RngStream rng(9, 0);
    std::vector<double> counts(6, 0.0);
    const int n = 600000;
    for (int i = 0; i < n; i++)
        counts[rng.uniform_int(1, 6) - 1] += 1.0;
    std::vector<double> expected(6, n / 6.0);
    CHECK(testutil::chi2_gof_p(counts, expected) > 0.001);
}

TEST_CASE("normal_quantile matches known points")
{
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(normal_quantile(0.95) == doctest::Approx(1.6448536269514722).epsilon(1e-9));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-9));
    CHECK(normal_quantile(0.05) == doctest::Approx(-1.6448536269514722).epsilon(1e-9));
    CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("distinct streams are uncorrelated across drops")
{
    // Lag-0 cross correlation between neighbouring streams stays small.
    const int n = 100000;
    std::vector<double> x(n), y(n);
    RngStream a(11, 100), b(11, 101);
    for (int i = 0; i < n; i++)
    {
        x[i] = a.uniform() - 0.5;
        y[i] = b.uniform() - 0.5;
    }
    double dot = 0.0;
    for (int i = 0; i < n; i++)
        dot += x[i] * y[i];
    double corr = dot / n / (1.0 / 12.0);
    CHECK(std::fabs(corr) < 0.02);
}
