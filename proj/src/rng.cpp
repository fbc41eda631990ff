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

#include "mmwavesim/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mmwavesim
{

double RngStream::uniform(double lo, double hi)
{
    if (lo > hi)
        throw std::invalid_argument("uniform: lower bound exceeds upper bound");
    if (lo == hi)
        return lo;
    return lo + (hi - lo) * uniform();
}

std::int64_t RngStream::uniform_int(std::int64_t lo, std::int64_t hi)
{
    if (lo > hi)
        throw std::invalid_argument("uniform_int: lower bound exceeds upper bound");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1ULL;
    if (range == 0ULL) // full 64-bit span
        return static_cast<std::int64_t>(next_u64());
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do
        x = next_u64();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
}

double RngStream::normal()
{
    // u1 in (0, 1] keeps the log finite.
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::exponential(double mean)
{
    if (!(mean > 0.0))
        throw std::invalid_argument("exponential: mean must be positive");
    return -mean * std::log(1.0 - uniform());
}

std::uint64_t RngStream::poisson(double mean)
{
    if (!(mean > 0.0))
        throw std::invalid_argument("poisson: mean must be positive");

    // Split very large means so exp(-mean) stays representable.
    std::uint64_t count = 0;
    double remaining = mean;
    while (remaining > 500.0)
    {
        count += poisson(250.0);
        remaining -= 250.0;
    }
    double limit = std::exp(-remaining);
    double prod = uniform();
    std::uint64_t k = 0;
    while (prod > limit)
    {
        k++;
        prod *= uniform();
    }
    return count + k;
}

// Acklam's rational approximation refined with one Halley step against erfc.
double normal_quantile(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p must lie in (0,1)");

    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                               1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                               6.680131188771972e+01, -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                               -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                               3.754408661907416e+00};

    const double p_low = 0.02425;
    double x;
    if (p < p_low)
    {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    else if (p <= 1.0 - p_low)
    {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    else
    {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // Halley refinement: e = Phi(x) - p
    double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

} // namespace mmwavesim
