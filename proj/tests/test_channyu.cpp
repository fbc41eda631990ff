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

#include <algorithm>
#include <cmath>
#include <set>

#include "mmwavesim/chan3gpp.hpp"
#include "mmwavesim/channyu.hpp"
#include "test_util.hpp"

using namespace mmwavesim;

namespace
{
LinkGeometry test_geometry()
{
    LinkGeometry g;
    g.d2d_m = 60.0;
    g.azimuth_deg = -10.0;
    g.bs_height_m = 10.0;
    g.ue_height_m = 1.5;
    return g;
}
} // namespace

TEST_CASE("time cluster count is uniform on 1..6")
{
    RngStream rng(61, 0);
    const int n = 1000000;
    std::vector<double> counts(6, 0.0);
    for (int i = 0; i < n; i++)
        counts[draw_counts_nyu(rng, LinkState::nlos).n_time_clusters - 1] += 1.0;
    for (double c : counts)
        CHECK(std::fabs(c / n - 1.0 / 6.0) < 0.005); // within 0.5% per bin
    CHECK(testutil::chi2_gof_p(counts, std::vector<double>(6, n / 6.0)) > 0.001);
}

TEST_CASE("lobe counts always lie in [1, 5]")
{
    RngStream rng(62, 0);
    for (int i = 0; i < 100000; i++)
    {
        NyuCounts c = draw_counts_nyu(rng, i % 2 ? LinkState::los : LinkState::nlos);
        CHECK(c.n_lobes_departure >= 1);
        CHECK(c.n_lobes_departure <= 5);
        CHECK(c.n_lobes_arrival >= 1);
        CHECK(c.n_lobes_arrival <= 5);
        for (int s : c.subpaths_per_cluster)
        {
            CHECK(s >= 1);
            CHECK(s <= 30);
        }
    }
}

TEST_CASE("subpath counts are uniform on 1..30")
{
    RngStream rng(63, 0);
    std::vector<double> counts(30, 0.0);
    double total = 0.0;
    while (total < 300000)
        for (int s : draw_counts_nyu(rng, LinkState::nlos).subpaths_per_cluster)
        {
            counts[s - 1] += 1.0;
            total += 1.0;
        }
    CHECK(testutil::chi2_gof_p(counts, std::vector<double>(30, total / 30.0)) > 0.001);
}

TEST_CASE("TC count varies across seeds")
{
    std::set<int> seen;
    for (std::uint64_t seed = 0; seed < 100; seed++)
    {
        RngStream rng(seed, 0);
        seen.insert(draw_counts_nyu(rng, LinkState::nlos).n_time_clusters);
    }
    CHECK(seen.size() >= 2);
}

TEST_CASE("consecutive cluster delay gaps respect the void interval for all seeds")
{
    NyuParams params = NyuTable::defaults().nlos;
    for (std::uint64_t seed = 0; seed < 2000; seed++)
    {
        RngStream rng(seed, 1);
        NyuCounts counts = draw_counts_nyu(rng, LinkState::nlos);
        std::vector<TimeCluster> tcs = generate_time_clusters(rng, counts, params);
        for (std::size_t i = 1; i < tcs.size(); i++)
            CHECK(tcs[i].excess_delay_s - tcs[i - 1].excess_delay_s >= 25e-9 - 1e-15);
    }
}

TEST_CASE("single time cluster carries the whole profile")
{
    RngStream rng(64, 0);
    NyuCounts counts;
    counts.n_time_clusters = 1;
    counts.subpaths_per_cluster = {7};
    std::vector<TimeCluster> tcs = generate_time_clusters(rng, counts, NyuTable::defaults().nlos);
    REQUIRE(tcs.size() == 1);
    CHECK(tcs[0].power == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("total power over clusters and subpaths is 1")
{
    NyuParams params = NyuTable::defaults().nlos;
    for (std::uint64_t seed = 0; seed < 500; seed++)
    {
        RngStream rng(seed, 2);
        NyuCounts counts = draw_counts_nyu(rng, LinkState::nlos);
        double total = 0.0;
        for (const TimeCluster &tc : generate_time_clusters(rng, counts, params))
        {
            for (const auto &[rho, p] : tc.subpaths)
                total += p;
            // intra delays ascend from zero
            CHECK(tc.subpaths.front().first == 0.0);
            for (std::size_t m = 1; m < tc.subpaths.size(); m++)
                CHECK(tc.subpaths[m].first >= tc.subpaths[m - 1].first);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("single lobe mean azimuth is uniform on the circle")
{
    RngStream rng(65, 0);
    NyuParams params = NyuTable::defaults().nlos;
    std::vector<double> means;
    for (int i = 0; i < 100000; i++)
    {
        auto [dep, arr] = generate_spatial_lobes(rng, 1, 1, params);
        means.push_back(dep[0].mean_az_deg);
        CHECK(dep[0].mean_az_deg >= -180.0);
        CHECK(dep[0].mean_az_deg < 180.0);
    }
    CHECK(testutil::rayleigh_uniformity_p(means) > 0.01);
}

TEST_CASE("any two lobe means are separated by at least 360/(2n) degrees")
{
    RngStream rng(66, 0);
    NyuParams params = NyuTable::defaults().nlos;
    for (int trial = 0; trial < 5000; trial++)
    {
        int n = 2 + trial % 4;
        auto [dep, arr] = generate_spatial_lobes(rng, n, 1, params);
        double min_sep = 360.0;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
            {
                double diff = std::fabs(wrap_azimuth_deg(dep[i].mean_az_deg - dep[j].mean_az_deg));
                min_sep = std::min(min_sep, diff);
            }
        CHECK(min_sep >= 360.0 / (2.0 * n) - 1e-9);
    }
}

TEST_CASE("with one lobe per side every ray stays inside the spread envelope")
{
    RngStream rng(67, 0);
    NyuParams params = NyuTable::defaults().nlos;
    NyuCounts counts;
    counts.n_time_clusters = 3;
    counts.subpaths_per_cluster = {10, 10, 10};
    std::vector<TimeCluster> tcs = generate_time_clusters(rng, counts, params);
    auto [dep, arr] = generate_spatial_lobes(rng, 1, 1, params);
    ChannelRealization real = assign_subpaths_to_lobes(rng, tcs, dep, arr, params);
    for (const Ray &r : real.rays)
    {
        // 6 sigma envelope around the lobe mean
        CHECK(std::fabs(wrap_azimuth_deg(r.aoa_az_deg - arr[0].mean_az_deg)) <
              6.0 * params.lobe_az_spread_deg);
        CHECK(std::fabs(wrap_azimuth_deg(r.aod_az_deg - dep[0].mean_az_deg)) <
              6.0 * params.lobe_az_spread_deg);
    }
}

TEST_CASE("ray count equals the total subpath count")
{
    RngStream rng(68, 0);
    NyuParams params = NyuTable::defaults().nlos;
    NyuCounts counts = draw_counts_nyu(rng, LinkState::nlos);
    std::vector<TimeCluster> tcs = generate_time_clusters(rng, counts, params);
    auto [dep, arr] = generate_spatial_lobes(rng, counts.n_lobes_departure, counts.n_lobes_arrival,
                                             params);
    ChannelRealization real = assign_subpaths_to_lobes(rng, tcs, dep, arr, params);
    int expected = 0;
    for (int s : counts.subpaths_per_cluster)
        expected += s;
    CHECK(static_cast<int>(real.rays.size()) == expected);
}

TEST_CASE("a time cluster can span two arrival lobes (decoupled statistics)")
{
    NyuParams params = NyuTable::defaults().nlos;
    int spanning = 0;
    for (std::uint64_t seed = 0; seed < 10000; seed++)
    {
        RngStream rng(seed, 3);
        NyuCounts counts;
        counts.n_time_clusters = 1;
        counts.subpaths_per_cluster = {8};
        std::vector<TimeCluster> tcs = generate_time_clusters(rng, counts, params);
        auto [dep, arr] = generate_spatial_lobes(rng, 1, 2, params);
        ChannelRealization real = assign_subpaths_to_lobes(rng, tcs, dep, arr, params);

        // classify each ray by nearest arrival lobe
        std::set<int> lobes_hit;
        for (const Ray &r : real.rays)
        {
            double d0 = std::fabs(wrap_azimuth_deg(r.aoa_az_deg - arr[0].mean_az_deg));
            double d1 = std::fabs(wrap_azimuth_deg(r.aoa_az_deg - arr[1].mean_az_deg));
            lobes_hit.insert(d0 < d1 ? 0 : 1);
        }
        if (lobes_hit.size() > 1)
            spanning++;
    }
    // pr(all 8 subpaths on one lobe) = 2 * 0.5^8, so spanning should be ~99%
    CHECK(spanning > 9000);
}

TEST_CASE("realization is normalized and sparser than 3GPP NLOS for all seeds")
{
    NyuTable table = NyuTable::defaults();
    LinkGeometry geom = test_geometry();
    std::vector<double> counts;
    for (std::uint64_t seed = 0; seed < 2000; seed++)
    {
        RngStream rng(seed, 4);
        LinkState state = seed % 3 == 0 ? LinkState::los : LinkState::nlos;
        ChannelRealization real = realize_nyusim(rng, table, geom, state, 0.8889);
        REQUIRE(real.power_sum() == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(!real.rays.empty());
        CHECK(real.rays.size() < 380); // hard bound: 6 * 30 + specular
        counts.push_back(static_cast<double>(real.rays.size()));
    }
    std::sort(counts.begin(), counts.end());
    CHECK(counts[counts.size() / 2] < 380.0);
}

TEST_CASE("LOS realization carries the boresight specular ray")
{
    RngStream rng(69, 0);
    LinkGeometry geom = test_geometry();
    ChannelRealization real = realize_nyusim(rng, NyuTable::defaults(), geom, LinkState::los, 0.8889);
    const Ray &spec = real.rays.back();
    CHECK(spec.power == doctest::Approx(0.8889));
    CHECK(spec.aod_az_deg == doctest::Approx(geom.depart_azimuth_deg()));
    CHECK(spec.aoa_az_deg == doctest::Approx(geom.arrive_azimuth_deg()));
}

TEST_CASE("uncapped Poisson lobe means match the table values")
{
    // The generator caps at [1,5]; the underlying sampler is checked uncapped.
    RngStream rng(70, 0);
    const int n = 1000000;
    double dep_los = 0.0, arr_los = 0.0, dep_nlos = 0.0, arr_nlos = 0.0;
    for (int i = 0; i < n; i++)
    {
        dep_los += static_cast<double>(rng.poisson(1.9));
        arr_los += static_cast<double>(rng.poisson(1.8));
        dep_nlos += static_cast<double>(rng.poisson(1.5));
        arr_nlos += static_cast<double>(rng.poisson(2.1));
    }
    CHECK(dep_los / n == doctest::Approx(1.9).epsilon(0.006));
    CHECK(arr_los / n == doctest::Approx(1.8).epsilon(0.006));
    CHECK(dep_nlos / n == doctest::Approx(1.5).epsilon(0.007));
    CHECK(arr_nlos / n == doctest::Approx(2.1).epsilon(0.006));
}
