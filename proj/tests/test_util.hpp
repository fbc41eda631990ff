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
//
// Independent statistical oracles used by the test suites. Everything here is
// implemented from textbook definitions and never calls into the library code
// it checks.

#ifndef MMWAVESIM_TEST_UTIL_HPP
#define MMWAVESIM_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace testutil
{

inline double mean(const std::vector<double> &v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double variance(const std::vector<double> &v)
{
    double m = mean(v);
    double s = 0.0;
    for (double x : v)
        s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

// Regularized upper incomplete gamma Q(a, x) (series + continued fraction).
inline double gammq(double a, double x)
{
    if (x < 0.0 || a <= 0.0)
        throw std::invalid_argument("gammq: bad arguments");
    if (x == 0.0)
        return 1.0;

    double gln = std::lgamma(a);
    if (x < a + 1.0)
    {
        // lower series, Q = 1 - P
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; i++)
        {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-14)
                break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    // continued fraction
    const double fpmin = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / fpmin, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; i++)
    {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-14)
            break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

// Chi-square goodness-of-fit p-value from observed/expected bin counts.
inline double chi2_gof_p(const std::vector<double> &observed, const std::vector<double> &expected)
{
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::invalid_argument("chi2_gof_p: bad bins");
    double chi2 = 0.0;
    for (std::size_t i = 0; i < observed.size(); i++)
        chi2 += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
    double dof = static_cast<double>(observed.size() - 1);
    return gammq(dof / 2.0, chi2 / 2.0);
}

// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)> &cdf)
{
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); i++)
    {
        double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

// Asymptotic KS p-value (Kolmogorov distribution with small-sample correction).
inline double ks_p(double d, std::size_t n)
{
    double sqn = std::sqrt(static_cast<double>(n));
    double lambda = (sqn + 0.12 + 0.11 / sqn) * d;
    double sum = 0.0;
    for (int k = 1; k <= 100; k++)
    {
        double term = 2.0 * std::pow(-1.0, k - 1) * std::exp(-2.0 * k * k * lambda * lambda);
        sum += term;
        if (std::fabs(term) < 1e-12)
            break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

// Power-weighted circular spread in degrees: sqrt(-2 ln |sum p e^{j theta}| / sum p).
inline double circular_spread_deg(const std::vector<double> &angles_deg,
                                  const std::vector<double> &weights)
{
    std::complex<double> acc(0.0, 0.0);
    double wsum = 0.0;
    for (std::size_t i = 0; i < angles_deg.size(); i++)
    {
        acc += weights[i] * std::polar(1.0, angles_deg[i] * M_PI / 180.0);
        wsum += weights[i];
    }
    double r = std::abs(acc) / wsum;
    return std::sqrt(-2.0 * std::log(std::max(r, 1e-300))) * 180.0 / M_PI;
}

// Rayleigh test p-value for circular uniformity (Z = n * Rbar^2).
inline double rayleigh_uniformity_p(const std::vector<double> &angles_deg)
{
    std::complex<double> acc(0.0, 0.0);
    for (double a : angles_deg)
        acc += std::polar(1.0, a * M_PI / 180.0);
    double n = static_cast<double>(angles_deg.size());
    double rbar = std::abs(acc) / n;
    double z = n * rbar * rbar;
    // Second-order correction (Zar), adequate for n >> 100.
    return std::exp(-z) * (1.0 + (2.0 * z - z * z) / (4.0 * n));
}

} // namespace testutil

#endif
