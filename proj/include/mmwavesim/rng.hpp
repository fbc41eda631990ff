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

#ifndef MMWAVESIM_RNG_HPP
#define MMWAVESIM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace mmwavesim
{

// splitmix64 finalizer, used to whiten (seed, stream) pairs into generator state.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Splittable random stream. Every (seed, stream_id) pair maps to an independent
// sequence, so per-drop streams give identical results regardless of how drops
// are scheduled across threads. The raw integer sequence is the standard
// mt19937_64 output and is therefore identical across platforms; all sampling
// transforms below are implemented by hand (the std:: distribution objects are
// not portable across library implementations).
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id),
          gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream_id + 0x632be59bd9b4e019ULL)))
    {
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1), 53 random mantissa bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi); degenerate lo == hi returns lo.
    double uniform(double lo, double hi);

    // Uniform integer in [lo, hi], inclusive, rejection sampled (unbiased).
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    // Standard normal via Box-Muller (two uniforms per sample, no cached spare).
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Exponential with the given mean (mean > 0).
    double exponential(double mean);

    // Poisson counting sample (Knuth product method, chunked for large means).
    std::uint64_t poisson(double mean);

    // In-place Fisher-Yates shuffle.
    template <typename T> void shuffle(std::vector<T> &v)
    {
        for (std::size_t i = v.size(); i > 1; i--)
        {
            std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 gen_;
};

// Standard normal quantile function (inverse CDF), |error| < 1e-13 on (0,1).
double normal_quantile(double p);

} // namespace mmwavesim

#endif
