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

#ifndef MMWAVESIM_CHAN3GPP_HPP
#define MMWAVESIM_CHAN3GPP_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mmwavesim/realization.hpp"

namespace mmwavesim
{

// Distribution parameters of the large-scale parameters for one
// (environment, state) pair. Shipped as a CSV table; defaults are evaluated
// at a 28 GHz carrier. Departure and arrival zenith spreads share the zsa
// statistics (the table carries a single zenith-spread column).
struct LspStats
{
    double ds_mu_log10_s = -7.181; // log10(seconds)
    double ds_sigma = 0.514;
    double asd_mu_log10_deg = 1.1936;
    double asd_sigma = 0.4909;
    double asa_mu_log10_deg = 1.6930;
    double asa_sigma = 0.3731;
    double zsa_mu_log10_deg = 0.8615;
    double zsa_sigma = 0.3076;
    double k_mu_db = 0.0;
    double k_sigma_db = 0.0;
    double xpr_mu_db = 8.0;
    double xpr_sigma_db = 3.0;
    double delay_proportionality = 2.1; // r_tau
    double per_cluster_shadow_db = 3.0;
    double intra_spread_aod_deg = 10.0;
    double intra_spread_aoa_deg = 22.0;
    double intra_spread_zod_deg = 7.0;
    double intra_spread_zoa_deg = 7.0;
};

struct LspTable
{
    LspStats umi_los, umi_nlos, uma_los, uma_nlos;

    const LspStats &get(Environment e, LinkState s) const;

    static LspTable defaults();
    static LspTable from_csv(const std::string &path);
    std::string to_csv() const;
};

// Per-realization draw of the large-scale parameters.
struct Lsp3gpp
{
    double delay_spread_s = 0.0;
    double asd_deg = 0.0; // azimuth spread of departure
    double asa_deg = 0.0;
    double zsd_deg = 0.0;
    double zsa_deg = 0.0;
    double rician_k_db = 0.0; // LOS only
    double per_cluster_shadow_db = 0.0;
};

Lsp3gpp draw_lsp(RngStream &rng, const LspStats &stats, LinkState state);

// Fixed per-scenario counts ("12 / 19 clusters, 20 rays" for UMi).
std::pair<int, int> cluster_counts_3gpp(Environment env, LinkState state);

// Raw (unsorted) exponential cluster delay draws, scale = proportionality * delay_spread.
std::vector<double> draw_cluster_delays_raw(RngStream &rng, int n, double delay_spread_s,
                                            double proportionality);

// Sorted ascending, minimum subtracted (first delay is 0).
std::vector<double> generate_cluster_delays(RngStream &rng, int n, double delay_spread_s,
                                            double proportionality);

// Exponential delay-power law with per-cluster log-normal shadowing, normalized to sum 1.
std::vector<double> generate_cluster_powers(RngStream &rng, const std::vector<double> &delays,
                                            double delay_spread_s, double proportionality,
                                            double shadow_sigma_db);

struct ClusterAngles
{
    std::vector<double> aod_az_deg;
    std::vector<double> aod_zen_deg;
    std::vector<double> aoa_az_deg;
    std::vector<double> aoa_zen_deg;
};

// Per-cluster mean angles with power-weighted spread scaling, centered on the
// link direction. In LOS the first cluster is pinned to the geometric LOS ray.
ClusterAngles generate_cluster_angles(RngStream &rng, const std::vector<double> &powers,
                                      const Lsp3gpp &lsp, LinkState state, const LinkGeometry &geom);

// The standard 20-entry normalized ray offset set.
using RayOffsets = std::array<double, 20>;
RayOffsets default_ray_offsets();
RayOffsets ray_offsets_from_csv(const std::string &path);
std::string ray_offsets_to_csv(const RayOffsets &offsets);

struct ClusterSpec
{
    double power = 0.0;
    double delay_s = 0.0;
    double aod_az_deg = 0.0, aod_zen_deg = 90.0;
    double aoa_az_deg = 0.0, aoa_zen_deg = 90.0;
};

// Expand one cluster into rays_per_cluster equal-power rays: cluster mean plus
// the scaled fixed offsets (arrival/zenith offsets coupled by random
// permutation), log-normal XPR and uniform phases per ray.
std::vector<Ray> expand_rays(RngStream &rng, const ClusterSpec &cluster, int rays_per_cluster,
                             const LspStats &stats, const RayOffsets &offsets);

// Full generator: counts -> delays -> powers -> angles -> rays (+ LOS specular).
ChannelRealization realize_3gpp(RngStream &rng, Environment env, const LspTable &table,
                                const LinkGeometry &geom, LinkState state,
                                const RayOffsets &offsets);

} // namespace mmwavesim

#endif
