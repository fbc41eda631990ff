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

#ifndef MMWAVESIM_MONTECARLO_HPP
#define MMWAVESIM_MONTECARLO_HPP

#include <utility>
#include <vector>

#include "mmwavesim/beamform.hpp"
#include "mmwavesim/config.hpp"

namespace mmwavesim
{

// One user placement: distance and bearing from the BS.
struct UserLink
{
    double d2d_m = 0.0;
    double azimuth_deg = 0.0;
};

// Distances area-uniform over the annulus (density proportional to d),
// azimuths uniform over the circle.
std::vector<UserLink> drop_users(RngStream &rng, int k, double min_m, double max_m);

// Per-drop outcome for one channel model.
struct ModelDropResult
{
    std::vector<double> eigenvalues; // user 1's H*H^H eigenvalues, descending
    std::vector<double> se_hybrid;   // per-user spectral efficiency [bps/Hz]
    std::vector<double> se_bd;
    std::vector<LinkState> states;
    int resamples = 0;
};

struct DropResult
{
    std::vector<UserLink> users;
    ModelDropResult three_gpp;
    ModelDropResult nyusim;
    std::vector<double> rayleigh_eigenvalues; // eigen baseline, user 1 geometry
    LinkState rayleigh_state = LinkState::nlos;
};

// Quantities derived once per campaign from the config.
struct CampaignDerived
{
    double cell_radius_m = 0.0;
    double noise_power_mw = 0.0;
    double total_power_mw = 0.0;
};

CampaignDerived derive_campaign(const SystemConfig &config);

// Deterministic given (config.seed, drop_index): user placement, per-model
// link states, realizations, channel assembly, eigen report for user 1 and
// hybrid/BD spectral efficiencies for all users.
DropResult run_drop(const SystemConfig &config, const CampaignDerived &derived,
                    std::uint64_t drop_index);

struct CampaignResult
{
    SystemConfig config;
    CampaignDerived derived;
    std::vector<DropResult> drops;
    int degenerate_resamples = 0;

    // Flattened sample views.
    std::vector<double> eigen_ratio_samples(ChannelModel model, int rank_zero_based) const;
    std::vector<double> eigenvalue_samples(ChannelModel model, int rank_zero_based) const;
    std::vector<double> se_samples(ChannelModel model, bool hybrid) const;
    double median_eigen_spread(ChannelModel model) const; // median of lambda_max / lambda_min
};

// Parallel campaign (OpenMP over drops). Worker count comes from the
// MMWAVESIM_WORKERS environment variable when set, otherwise the OpenMP
// default. Results are aggregated by drop index and therefore identical to
// run_campaign_serial for any worker count.
CampaignResult run_campaign(const SystemConfig &config);

// Serial reference implementation, kept for testing and benchmarking.
CampaignResult run_campaign_serial(const SystemConfig &config);

int resolve_worker_count();

// Sorted step function (value, cumulative probability k/N). Throws on empty
// input.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples);

double median(std::vector<double> samples);

} // namespace mmwavesim

#endif
