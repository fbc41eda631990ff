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

#include "mmwavesim/chan3gpp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mmwavesim
{

namespace
{

// Azimuth / zenith angle scaling factors versus cluster count. Nearest entry
// is used for counts not in the table.
struct ScalingEntry
{
    int n;
    double c;
};

constexpr ScalingEntry kAzimuthScaling[] = {{4, 0.779},  {5, 0.860},  {8, 1.018},  {10, 1.090},
                                            {11, 1.123}, {12, 1.146}, {14, 1.190}, {15, 1.211},
                                            {16, 1.226}, {19, 1.273}, {20, 1.289}, {25, 1.358}};

constexpr ScalingEntry kZenithScaling[] = {{8, 0.889},   {10, 0.957}, {11, 1.031}, {12, 1.104},
                                           {15, 1.1088}, {19, 1.184}, {20, 1.178}, {25, 1.282}};

template <std::size_t N> double lookup_scaling(const ScalingEntry (&table)[N], int n_clusters)
{
    const ScalingEntry *best = &table[0];
    for (const ScalingEntry &e : table)
        if (std::abs(e.n - n_clusters) < std::abs(best->n - n_clusters))
            best = &e;
    return best->c;
}

double azimuth_scaling(int n_clusters, bool los, double k_db)
{
    double c = lookup_scaling(kAzimuthScaling, n_clusters);
    if (los)
        c *= 1.1035 - 0.028 * k_db - 0.002 * k_db * k_db + 0.0001 * k_db * k_db * k_db;
    return c;
}

double zenith_scaling(int n_clusters, bool los, double k_db)
{
    double c = lookup_scaling(kZenithScaling, n_clusters);
    if (los)
        c *= 1.3086 + 0.0339 * k_db - 0.0077 * k_db * k_db + 0.0002 * k_db * k_db * k_db;
    return c;
}

std::vector<int> random_permutation(RngStream &rng, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

} // namespace

const LspStats &LspTable::get(Environment e, LinkState s) const
{
    if (e == Environment::umi_street_canyon)
        return s == LinkState::los ? umi_los : umi_nlos;
    return s == LinkState::los ? uma_los : uma_nlos;
}

LspTable LspTable::defaults()
{
    LspTable t;
    // UMi street canyon, 28 GHz.
    t.umi_los = {-7.4910, 0.38, 1.1369, 0.41, 1.6130, 0.3005, 0.5838, 0.2815,
                 9.0,     5.0,  9.0,    3.0,  3.0,    3.0,    3.0,    17.0,
                 7.0,     7.0};
    t.umi_nlos = {-7.1810, 0.5140, 1.1936, 0.4909, 1.6930, 0.3731, 0.8615, 0.3076,
                  0.0,     0.0,    8.0,    3.0,    2.1,    3.0,    10.0,   22.0,
                  7.0,     7.0};
    // UMa, 28 GHz.
    t.uma_los = {-7.0944, 0.66, 1.2212, 0.28, 1.81, 0.20, 0.95, 0.16,
                 9.0,     3.5,  8.0,    4.0,  2.5,  3.0,  5.0,  11.0,
                 7.0,     7.0};
    t.uma_nlos = {-6.5752, 0.39, 1.3344, 0.28, 1.6893, 0.11, 1.0437, 0.16,
                  0.0,     0.0,  7.0,    3.0,  2.3,    3.0,  2.0,    15.0,
                  7.0,     7.0};
    return t;
}

Lsp3gpp draw_lsp(RngStream &rng, const LspStats &stats, LinkState state)
{
    Lsp3gpp lsp;
    lsp.delay_spread_s = std::pow(10.0, rng.normal(stats.ds_mu_log10_s, stats.ds_sigma));
    lsp.asd_deg = std::pow(10.0, rng.normal(stats.asd_mu_log10_deg, stats.asd_sigma));
    lsp.asa_deg = std::pow(10.0, rng.normal(stats.asa_mu_log10_deg, stats.asa_sigma));
    double zsa = std::pow(10.0, rng.normal(stats.zsa_mu_log10_deg, stats.zsa_sigma));
    double zsd = std::pow(10.0, rng.normal(stats.zsa_mu_log10_deg, stats.zsa_sigma));
    lsp.zsa_deg = zsa;
    lsp.zsd_deg = zsd;
    lsp.rician_k_db = state == LinkState::los ? rng.normal(stats.k_mu_db, stats.k_sigma_db) : 0.0;
    lsp.per_cluster_shadow_db = stats.per_cluster_shadow_db;
    return lsp;
}

std::pair<int, int> cluster_counts_3gpp(Environment env, LinkState state)
{
    if (env == Environment::umi_street_canyon)
        return state == LinkState::los ? std::pair{12, 20} : std::pair{19, 20};
    return state == LinkState::los ? std::pair{12, 20} : std::pair{20, 20};
}

std::vector<double> draw_cluster_delays_raw(RngStream &rng, int n, double delay_spread_s,
                                            double proportionality)
{
    if (n < 1)
        throw std::invalid_argument("cluster delays: need at least one cluster");
    if (!(delay_spread_s > 0.0))
        throw std::invalid_argument("cluster delays: delay spread must be positive");
    std::vector<double> tau(n);
    for (double &t : tau)
        t = rng.exponential(proportionality * delay_spread_s);
    return tau;
}

std::vector<double> generate_cluster_delays(RngStream &rng, int n, double delay_spread_s,
                                            double proportionality)
{
    std::vector<double> tau = draw_cluster_delays_raw(rng, n, delay_spread_s, proportionality);
    std::sort(tau.begin(), tau.end());
    double t0 = tau.front();
    for (double &t : tau)
        t -= t0;
    return tau;
}

std::vector<double> generate_cluster_powers(RngStream &rng, const std::vector<double> &delays,
                                            double delay_spread_s, double proportionality,
                                            double shadow_sigma_db)
{
    if (delays.empty())
        throw std::invalid_argument("cluster powers: no delays");
    double r = proportionality;
    std::vector<double> p(delays.size());
    for (std::size_t i = 0; i < delays.size(); i++)
    {
        double shadow_db = shadow_sigma_db > 0.0 ? rng.normal(0.0, shadow_sigma_db) : 0.0;
        p[i] = std::exp(-delays[i] * (r - 1.0) / (r * delay_spread_s)) *
               std::pow(10.0, -shadow_db / 10.0);
    }
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (double &v : p)
        v /= sum;
    return p;
}

ClusterAngles generate_cluster_angles(RngStream &rng, const std::vector<double> &powers,
                                      const Lsp3gpp &lsp, LinkState state, const LinkGeometry &geom)
{
    int n = static_cast<int>(powers.size());
    if (n < 1)
        throw std::invalid_argument("cluster angles: no clusters");
    bool los = state == LinkState::los;
    double p_max = *std::max_element(powers.begin(), powers.end());

    double c_az = azimuth_scaling(n, los, lsp.rician_k_db);
    double c_zen = zenith_scaling(n, los, lsp.rician_k_db);

    auto gen = [&](double spread, double c, bool zenith, double center) {
        std::vector<double> ang(n);
        for (int i = 0; i < n; i++)
        {
            double rel = powers[i] / p_max;
            double mag = zenith ? -spread * std::log(rel) / c
                                : 2.0 * (spread / 1.4) * std::sqrt(-std::log(rel)) / c;
            double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
            double jitter = rng.normal(0.0, spread / 7.0);
            ang[i] = mag * sign + jitter;
        }
        if (los)
        {
            double anchor = ang[0];
            for (double &a : ang)
                a -= anchor; // pins cluster 1 onto the LOS ray
        }
        for (double &a : ang)
            a = zenith ? reflect_zenith_deg(a + center) : wrap_azimuth_deg(a + center);
        return ang;
    };

    ClusterAngles out;
    out.aod_az_deg = gen(lsp.asd_deg, c_az, false, geom.depart_azimuth_deg());
    out.aoa_az_deg = gen(lsp.asa_deg, c_az, false, geom.arrive_azimuth_deg());
    out.aod_zen_deg = gen(lsp.zsd_deg, c_zen, true, geom.depart_zenith_deg());
    out.aoa_zen_deg = gen(lsp.zsa_deg, c_zen, true, geom.arrive_zenith_deg());
    return out;
}

RayOffsets default_ray_offsets()
{
    return {0.0447, -0.0447, 0.1413, -0.1413, 0.2492, -0.2492, 0.3715, -0.3715, 0.5129, -0.5129,
            0.6797, -0.6797, 0.8844, -0.8844, 1.1481, -1.1481, 1.5195, -1.5195, 2.1551, -2.1551};
}

std::vector<Ray> expand_rays(RngStream &rng, const ClusterSpec &cluster, int rays_per_cluster,
                             const LspStats &stats, const RayOffsets &offsets)
{
    if (rays_per_cluster < 1 || rays_per_cluster > static_cast<int>(offsets.size()))
        throw std::invalid_argument("expand_rays: rays_per_cluster must lie in [1, 20]");

    // Departure azimuth keeps the natural offset order; the other three angle
    // sets are coupled to it by random permutation.
    std::vector<int> perm_aoa = random_permutation(rng, rays_per_cluster);
    std::vector<int> perm_zod = random_permutation(rng, rays_per_cluster);
    std::vector<int> perm_zoa = random_permutation(rng, rays_per_cluster);

    std::vector<Ray> rays(rays_per_cluster);
    for (int m = 0; m < rays_per_cluster; m++)
    {
        Ray &r = rays[m];
        r.delay_s = cluster.delay_s;
        r.power = cluster.power / rays_per_cluster;
        r.aod_az_deg = wrap_azimuth_deg(cluster.aod_az_deg + stats.intra_spread_aod_deg * offsets[m]);
        r.aoa_az_deg =
            wrap_azimuth_deg(cluster.aoa_az_deg + stats.intra_spread_aoa_deg * offsets[perm_aoa[m]]);
        r.aod_zen_deg =
            reflect_zenith_deg(cluster.aod_zen_deg + stats.intra_spread_zod_deg * offsets[perm_zod[m]]);
        r.aoa_zen_deg =
            reflect_zenith_deg(cluster.aoa_zen_deg + stats.intra_spread_zoa_deg * offsets[perm_zoa[m]]);
        r.xpr = std::pow(10.0, rng.normal(stats.xpr_mu_db, stats.xpr_sigma_db) / 10.0);
        r.phase_tt = rng.uniform(0.0, 2.0 * std::numbers::pi);
        r.phase_tp = rng.uniform(0.0, 2.0 * std::numbers::pi);
        r.phase_pt = rng.uniform(0.0, 2.0 * std::numbers::pi);
        r.phase_pp = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return rays;
}

ChannelRealization realize_3gpp(RngStream &rng, Environment env, const LspTable &table,
                                const LinkGeometry &geom, LinkState state, const RayOffsets &offsets)
{
    const LspStats &stats = table.get(env, state);
    Lsp3gpp lsp = draw_lsp(rng, stats, state);
    auto [n_clusters, rays_per_cluster] = cluster_counts_3gpp(env, state);

    std::vector<double> delays =
        generate_cluster_delays(rng, n_clusters, lsp.delay_spread_s, stats.delay_proportionality);
    std::vector<double> powers = generate_cluster_powers(
        rng, delays, lsp.delay_spread_s, stats.delay_proportionality, lsp.per_cluster_shadow_db);
    ClusterAngles angles = generate_cluster_angles(rng, powers, lsp, state, geom);

    // In LOS the clusters share 1/(K+1) of the profile; the specular ray gets K/(K+1).
    double k_lin = std::pow(10.0, lsp.rician_k_db / 10.0);
    double specular_fraction = state == LinkState::los ? k_lin / (k_lin + 1.0) : 0.0;

    ChannelRealization real;
    real.state = state;
    real.model = ChannelModel::three_gpp;
    real.rays.reserve(static_cast<std::size_t>(n_clusters) * rays_per_cluster + 1);

    for (int n = 0; n < n_clusters; n++)
    {
        ClusterSpec spec;
        spec.power = (1.0 - specular_fraction) * powers[n];
        spec.delay_s = delays[n];
        spec.aod_az_deg = angles.aod_az_deg[n];
        spec.aod_zen_deg = angles.aod_zen_deg[n];
        spec.aoa_az_deg = angles.aoa_az_deg[n];
        spec.aoa_zen_deg = angles.aoa_zen_deg[n];
        std::vector<Ray> cluster_rays = expand_rays(rng, spec, rays_per_cluster, stats, offsets);
        real.rays.insert(real.rays.end(), cluster_rays.begin(), cluster_rays.end());
    }

    if (state == LinkState::los)
    {
        Ray spec;
        spec.delay_s = 0.0;
        spec.power = specular_fraction;
        spec.aod_az_deg = geom.depart_azimuth_deg();
        spec.aod_zen_deg = geom.depart_zenith_deg();
        spec.aoa_az_deg = geom.arrive_azimuth_deg();
        spec.aoa_zen_deg = geom.arrive_zenith_deg();
        spec.xpr = 1e12; // pure co-polar specular component
        spec.phase_tt = rng.uniform(0.0, 2.0 * std::numbers::pi);
        spec.phase_tp = 0.0;
        spec.phase_pt = 0.0;
        spec.phase_pp = spec.phase_tt;
        real.rays.push_back(spec);
    }
    return real;
}

} // namespace mmwavesim
