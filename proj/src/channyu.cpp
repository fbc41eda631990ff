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

#include "mmwavesim/channyu.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmwavesim
{

NyuTable NyuTable::defaults()
{
    NyuTable t;
    t.los = {25.9, 6.0, 3.0, 25.0, 10.2, 4.9, 9.0, 3.0};
    t.nlos = {49.4, 6.0, 3.0, 25.0, 10.5, 6.0, 8.0, 3.0};
    return t;
}

NyuCounts draw_counts_nyu(RngStream &rng, LinkState state)
{
    NyuCounts c;
    c.n_time_clusters = static_cast<int>(rng.uniform_int(1, kMaxTimeClusters));
    c.subpaths_per_cluster.resize(c.n_time_clusters);
    for (int &n : c.subpaths_per_cluster)
        n = static_cast<int>(rng.uniform_int(1, kMaxSubpathsPerCluster));

    double mean_dep = state == LinkState::los ? 1.9 : 1.5;
    double mean_arr = state == LinkState::los ? 1.8 : 2.1;
    auto clamp_lobes = [](std::uint64_t n) {
        return std::max(1, std::min(kMaxSpatialLobes, static_cast<int>(n)));
    };
    c.n_lobes_departure = clamp_lobes(rng.poisson(mean_dep));
    c.n_lobes_arrival = clamp_lobes(rng.poisson(mean_arr));
    return c;
}

std::vector<TimeCluster> generate_time_clusters(RngStream &rng, const NyuCounts &counts,
                                                const NyuParams &params)
{
    int n_tc = counts.n_time_clusters;
    if (n_tc < 1 || static_cast<int>(counts.subpaths_per_cluster.size()) != n_tc)
        throw std::invalid_argument("generate_time_clusters: inconsistent counts");

    std::vector<TimeCluster> clusters(n_tc);

    // Excess delays: exponential inter-arrival gaps plus the fixed void interval.
    double tau_ns = 0.0;
    for (int i = 0; i < n_tc; i++)
    {
        if (i > 0)
            tau_ns += params.void_interval_ns + rng.exponential(params.tc_decay_ns);
        clusters[i].excess_delay_s = tau_ns * 1e-9;
    }

    // Cluster powers: exponential decay in excess delay with log-normal shadowing.
    double power_sum = 0.0;
    for (TimeCluster &tc : clusters)
    {
        double shadow_db =
            params.cluster_shadow_sigma_db > 0.0 ? rng.normal(0.0, params.cluster_shadow_sigma_db) : 0.0;
        tc.power = std::exp(-tc.excess_delay_s * 1e9 / params.tc_decay_ns) *
                   std::pow(10.0, -shadow_db / 10.0);
        power_sum += tc.power;
    }
    for (TimeCluster &tc : clusters)
        tc.power /= power_sum;

    // Subpaths: ascending intra-cluster delays from 0, exponentially decaying powers.
    for (int i = 0; i < n_tc; i++)
    {
        int n_sp = counts.subpaths_per_cluster[i];
        TimeCluster &tc = clusters[i];
        tc.subpaths.resize(n_sp);
        double rho_ns = 0.0, sp_sum = 0.0;
        for (int m = 0; m < n_sp; m++)
        {
            if (m > 0)
                rho_ns += rng.exponential(kSubpathSpacingNs);
            double w = std::exp(-rho_ns / params.subpath_decay_ns);
            tc.subpaths[m] = {rho_ns * 1e-9, w};
            sp_sum += w;
        }
        for (auto &[rho, w] : tc.subpaths)
            w *= tc.power / sp_sum;
    }
    return clusters;
}

std::pair<std::vector<SpatialLobe>, std::vector<SpatialLobe>>
generate_spatial_lobes(RngStream &rng, int n_departure, int n_arrival, const NyuParams &params)
{
    if (n_departure < 1 || n_arrival < 1)
        throw std::invalid_argument("generate_spatial_lobes: lobe counts must be >= 1");

    auto make = [&](int n, LobeKind kind) {
        // One lobe per 360/n sector, drawn in the middle half of its sector so
        // any two means differ by at least 360/(2n); a random rotation makes
        // the marginal uniform on the circle.
        double sector = 360.0 / n;
        double rotation = rng.uniform(0.0, 360.0);
        std::vector<SpatialLobe> lobes(n);
        for (int i = 0; i < n; i++)
        {
            SpatialLobe &l = lobes[i];
            l.kind = kind;
            l.mean_az_deg =
                wrap_azimuth_deg(i * sector + sector / 4.0 + rng.uniform(0.0, sector / 2.0) + rotation);
            l.mean_zen_deg = reflect_zenith_deg(90.0 + rng.normal(0.0, params.lobe_zen_spread_deg));
            l.az_spread_deg = params.lobe_az_spread_deg;
            l.zen_spread_deg = params.lobe_zen_spread_deg;
        }
        return lobes;
    };

    return {make(n_departure, LobeKind::departure), make(n_arrival, LobeKind::arrival)};
}

ChannelRealization assign_subpaths_to_lobes(RngStream &rng, const std::vector<TimeCluster> &clusters,
                                            const std::vector<SpatialLobe> &departure_lobes,
                                            const std::vector<SpatialLobe> &arrival_lobes,
                                            const NyuParams &params)
{
    if (clusters.empty() || departure_lobes.empty() || arrival_lobes.empty())
        throw std::invalid_argument("assign_subpaths_to_lobes: clusters and lobes must be non-empty");

    ChannelRealization real;
    real.model = ChannelModel::nyusim;

    for (const TimeCluster &tc : clusters)
    {
        for (const auto &[rho_s, power] : tc.subpaths)
        {
            const SpatialLobe &dep =
                departure_lobes[rng.uniform_int(0, static_cast<std::int64_t>(departure_lobes.size()) - 1)];
            const SpatialLobe &arr =
                arrival_lobes[rng.uniform_int(0, static_cast<std::int64_t>(arrival_lobes.size()) - 1)];

            Ray r;
            r.delay_s = tc.excess_delay_s + rho_s;
            r.power = power;
            r.aod_az_deg = wrap_azimuth_deg(dep.mean_az_deg + rng.normal(0.0, dep.az_spread_deg));
            r.aod_zen_deg = reflect_zenith_deg(dep.mean_zen_deg + rng.normal(0.0, dep.zen_spread_deg));
            r.aoa_az_deg = wrap_azimuth_deg(arr.mean_az_deg + rng.normal(0.0, arr.az_spread_deg));
            r.aoa_zen_deg = reflect_zenith_deg(arr.mean_zen_deg + rng.normal(0.0, arr.zen_spread_deg));
            r.xpr = std::pow(10.0, rng.normal(params.xpr_mu_db, params.xpr_sigma_db) / 10.0);
            r.phase_tt = rng.uniform(0.0, 2.0 * std::numbers::pi);
            r.phase_tp = rng.uniform(0.0, 2.0 * std::numbers::pi);
            r.phase_pt = rng.uniform(0.0, 2.0 * std::numbers::pi);
            r.phase_pp = rng.uniform(0.0, 2.0 * std::numbers::pi);
            real.rays.push_back(r);
        }
    }
    return real;
}

ChannelRealization realize_nyusim(RngStream &rng, const NyuTable &table, const LinkGeometry &geom,
                                  LinkState state, double los_boresight_fraction)
{
    if (!(los_boresight_fraction >= 0.0 && los_boresight_fraction < 1.0))
        throw std::invalid_argument("realize_nyusim: boresight fraction must lie in [0,1)");

    const NyuParams &params = table.get(state);
    NyuCounts counts = draw_counts_nyu(rng, state);
    std::vector<TimeCluster> clusters = generate_time_clusters(rng, counts, params);
    auto [dep_lobes, arr_lobes] =
        generate_spatial_lobes(rng, counts.n_lobes_departure, counts.n_lobes_arrival, params);
    ChannelRealization real = assign_subpaths_to_lobes(rng, clusters, dep_lobes, arr_lobes, params);
    real.state = state;

    if (state == LinkState::los)
    {
        for (Ray &r : real.rays)
            r.power *= 1.0 - los_boresight_fraction;
        Ray spec;
        spec.delay_s = 0.0;
        spec.power = los_boresight_fraction;
        spec.aod_az_deg = geom.depart_azimuth_deg();
        spec.aod_zen_deg = geom.depart_zenith_deg();
        spec.aoa_az_deg = geom.arrive_azimuth_deg();
        spec.aoa_zen_deg = geom.arrive_zenith_deg();
        spec.xpr = 1e12;
        spec.phase_tt = rng.uniform(0.0, 2.0 * std::numbers::pi);
        spec.phase_tp = 0.0;
        spec.phase_pt = 0.0;
        spec.phase_pp = spec.phase_tt;
        real.rays.push_back(spec);
    }
    return real;
}

} // namespace mmwavesim
