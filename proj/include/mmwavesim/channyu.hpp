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

#ifndef MMWAVESIM_CHANNYU_HPP
#define MMWAVESIM_CHANNYU_HPP

#include <string>
#include <utility>
#include <vector>

#include "mmwavesim/realization.hpp"

namespace mmwavesim
{

// Secondary statistics of the time-cluster / spatial-lobe model for one link
// state. Shipped as a CSV table; all values are tuning inputs.
struct NyuParams
{
    double tc_decay_ns = 49.4;         // cluster power decay constant (also inter-cluster gap scale)
    double subpath_decay_ns = 6.0;     // intra-cluster subpath power decay constant
    double cluster_shadow_sigma_db = 3.0;
    double void_interval_ns = 25.0;    // minimum gap between consecutive time clusters
    double lobe_az_spread_deg = 10.5;  // subpath azimuth scatter around the lobe mean
    double lobe_zen_spread_deg = 6.0;
    double xpr_mu_db = 8.0;
    double xpr_sigma_db = 3.0;
};

struct NyuTable
{
    NyuParams los, nlos;

    const NyuParams &get(LinkState s) const { return s == LinkState::los ? los : nlos; }

    static NyuTable defaults();
    static NyuTable from_csv(const std::string &path);
    std::string to_csv() const;
};

// Mean spacing of the intra-cluster subpath delays.
constexpr double kSubpathSpacingNs = 5.0;

// Spatial lobes never exceed this count; the Poisson draw is clamped to [1, 5].
constexpr int kMaxSpatialLobes = 5;
constexpr int kMaxTimeClusters = 6;
constexpr int kMaxSubpathsPerCluster = 30;

struct NyuCounts
{
    int n_time_clusters = 1;
    std::vector<int> subpaths_per_cluster;
    int n_lobes_departure = 1;
    int n_lobes_arrival = 1;
};

// TC count uniform on {1..6}, subpath counts uniform on {1..30}, lobe counts
// max(1, Poisson(mean)) clamped to 5 with the state-dependent means.
NyuCounts draw_counts_nyu(RngStream &rng, LinkState state);

struct TimeCluster
{
    double excess_delay_s = 0.0;
    double power = 0.0;
    // (intra-cluster delay [s], power) per subpath, delays ascending from 0.
    std::vector<std::pair<double, double>> subpaths;
};

// Cluster excess delays separated by at least the void interval, cluster and
// subpath powers exponentially decaying, everything normalized to total 1.
std::vector<TimeCluster> generate_time_clusters(RngStream &rng, const NyuCounts &counts,
                                                const NyuParams &params);

enum class LobeKind
{
    departure,
    arrival
};

struct SpatialLobe
{
    LobeKind kind = LobeKind::departure;
    double mean_az_deg = 0.0;
    double mean_zen_deg = 90.0;
    double az_spread_deg = 10.0;
    double zen_spread_deg = 6.0;
};

// Lobe mean azimuths drawn inside disjoint circular sectors (uniform over the
// circle after a random rotation), zeniths near the horizon.
std::pair<std::vector<SpatialLobe>, std::vector<SpatialLobe>>
generate_spatial_lobes(RngStream &rng, int n_departure, int n_arrival, const NyuParams &params);

// Each subpath picks a departure and an arrival lobe independently at random
// (temporal and spatial statistics decoupled) and scatters around the lobe
// means. Produces the flat ray list with absolute delays.
ChannelRealization assign_subpaths_to_lobes(RngStream &rng, const std::vector<TimeCluster> &clusters,
                                            const std::vector<SpatialLobe> &departure_lobes,
                                            const std::vector<SpatialLobe> &arrival_lobes,
                                            const NyuParams &params);

// Full generator. In LOS a deterministic boresight ray carries
// los_boresight_fraction of the profile, mirroring the 3GPP specular convention.
ChannelRealization realize_nyusim(RngStream &rng, const NyuTable &table, const LinkGeometry &geom,
                                  LinkState state, double los_boresight_fraction);

} // namespace mmwavesim

#endif
