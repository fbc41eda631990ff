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

#include "mmwavesim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <omp.h>

namespace mmwavesim
{

namespace
{

// Stream lanes per drop; fixed so every model draws independently of which
// models are enabled.
constexpr std::uint64_t kStreamStride = 16;
constexpr std::uint64_t kLanePositions = 0;
constexpr std::uint64_t kLane3gpp = 1;
constexpr std::uint64_t kLaneNyusim = 2;
constexpr std::uint64_t kLaneRayleigh = 3;

constexpr int kMaxResamplesPerDrop = 1000;

LinkGeometry make_geometry(const SystemConfig &config, const UserLink &user)
{
    LinkGeometry g;
    g.d2d_m = user.d2d_m;
    g.azimuth_deg = user.azimuth_deg;
    g.bs_height_m = config.resolved_bs_height_m();
    g.ue_height_m = config.ue_height_m;
    return g;
}

double model_los_probability(const SystemConfig &config, ChannelModel model, double d2d_m)
{
    if (model == ChannelModel::nyusim)
        return los_probability_nyusim(d2d_m, config.environment, config.scenario_params);
    // The Rayleigh baseline reuses the 3GPP link-state statistics.
    return los_probability_3gpp(d2d_m, config.environment, config.ue_height_m);
}

double draw_path_loss_db(RngStream &rng, const SystemConfig &config, const LinkGeometry &geom,
                         LinkState state)
{
    const PathLossParams &pl = config.scenario_params.get(config.environment).path_loss;
    double sf = sample_shadow_fading(rng, pl.sf_sigma_db(state));
    return path_loss_ci_two_slope(config.budget.carrier_ghz, geom.d3d_m(), pl.ple(state),
                                  config.two_slope, sf);
}

// Generate link states, path losses and realizations for every user under one
// model; used whole as the resampling unit for degenerate drops.
struct ModelChannels
{
    std::vector<ChannelRealization> realizations;
    std::vector<ChannelMatrix> channels;
    std::vector<LinkState> states;
};

ModelChannels generate_model_channels(RngStream &rng, const SystemConfig &config,
                                      const std::vector<UserLink> &users, ChannelModel model)
{
    ModelChannels mc;
    mc.realizations.reserve(users.size());
    mc.channels.reserve(users.size());
    mc.states.reserve(users.size());

    for (const UserLink &user : users)
    {
        LinkGeometry geom = make_geometry(config, user);
        double p_los = model_los_probability(config, model, user.d2d_m);
        LinkState state = draw_link_state(rng, p_los);
        double pl_db = draw_path_loss_db(rng, config, geom, state);

        ChannelRealization real =
            model == ChannelModel::three_gpp
                ? realize_3gpp(rng, config.environment, config.lsp_table, geom, state,
                               config.ray_offsets)
                : realize_nyusim(rng, config.nyu_table, geom, state, config.los_boresight_fraction);
        real.path_loss_db = pl_db;

        mc.channels.push_back(
            assemble_channel(real, config.bs_array, config.ue_array, config.budget.carrier_ghz));
        mc.states.push_back(state);
        mc.realizations.push_back(std::move(real));
    }
    return mc;
}

ModelDropResult run_model_lane(RngStream &rng, const SystemConfig &config,
                               const CampaignDerived &derived, const std::vector<UserLink> &users,
                               ChannelModel model)
{
    ModelDropResult result;
    for (int attempt = 0;; attempt++)
    {
        ModelChannels mc = generate_model_channels(rng, config, users, model);
        try
        {
            PrecoderSet hybrid = hybrid_precode(mc.channels, mc.realizations, config.bs_array,
                                                config.ue_array, derived.total_power_mw);
            PrecoderSet bd = bd_precode(mc.channels, derived.total_power_mw);

            EigenReport rep = eigen_report(mc.channels[0]);
            result.eigenvalues.assign(rep.eigenvalues.begin(), rep.eigenvalues.end());
            result.se_hybrid = spectral_efficiency(hybrid, mc.channels, derived.noise_power_mw);
            result.se_bd = spectral_efficiency(bd, mc.channels, derived.noise_power_mw);
            result.states = std::move(mc.states);
            return result;
        }
        catch (const DegenerateDrop &)
        {
            result.resamples++;
            if (attempt + 1 >= kMaxResamplesPerDrop)
                throw std::runtime_error("drop resampled " + std::to_string(kMaxResamplesPerDrop) +
                                         " times without a usable channel");
        }
    }
}

} // namespace

std::vector<UserLink> drop_users(RngStream &rng, int k, double min_m, double max_m)
{
    if (k < 1)
        throw std::invalid_argument("drop_users: need at least one user");
    if (!(min_m < max_m))
        throw std::invalid_argument("drop_users: lower bound must be below upper bound");

    std::vector<UserLink> users(k);
    for (UserLink &u : users)
    {
        double a = rng.uniform();
        u.d2d_m = std::sqrt(min_m * min_m + a * (max_m * max_m - min_m * min_m));
        u.azimuth_deg = rng.uniform(-180.0, 180.0);
    }
    return users;
}

CampaignDerived derive_campaign(const SystemConfig &config)
{
    config.validate();
    const PathLossParams &pl = config.scenario_params.get(config.environment).path_loss;

    CampaignDerived d;
    d.cell_radius_m = cell_radius_for_coverage(config.budget, pl, config.coverage_state);
    if (d.cell_radius_m <= config.min_distance_m)
        throw ConfigError("config: coverage radius " + std::to_string(d.cell_radius_m) +
                          " m does not exceed min_distance_m");
    d.noise_power_mw = std::pow(
        10.0, noise_power_dbm(config.budget.bandwidth_mhz, config.budget.noise_figure_db) / 10.0);
    d.total_power_mw = std::pow(10.0, config.budget.tx_power_dbm / 10.0);
    return d;
}

DropResult run_drop(const SystemConfig &config, const CampaignDerived &derived,
                    std::uint64_t drop_index)
{
    DropResult drop;

    RngStream rng_pos(config.seed, drop_index * kStreamStride + kLanePositions);
    drop.users = drop_users(rng_pos, config.users, config.min_distance_m, derived.cell_radius_m);

    if (config.has_model(ChannelModel::three_gpp))
    {
        RngStream rng(config.seed, drop_index * kStreamStride + kLane3gpp);
        drop.three_gpp = run_model_lane(rng, config, derived, drop.users, ChannelModel::three_gpp);
    }
    if (config.has_model(ChannelModel::nyusim))
    {
        RngStream rng(config.seed, drop_index * kStreamStride + kLaneNyusim);
        drop.nyusim = run_model_lane(rng, config, derived, drop.users, ChannelModel::nyusim);
    }
    if (config.has_model(ChannelModel::rayleigh))
    {
        RngStream rng(config.seed, drop_index * kStreamStride + kLaneRayleigh);
        LinkGeometry geom = make_geometry(config, drop.users[0]);
        double p_los = model_los_probability(config, ChannelModel::rayleigh, geom.d2d_m);
        drop.rayleigh_state = draw_link_state(rng, p_los);
        double pl_db = draw_path_loss_db(rng, config, geom, drop.rayleigh_state);
        ChannelMatrix h = rayleigh_baseline(rng, config.ue_array.elements(),
                                            config.bs_array.elements(), pl_db,
                                            config.budget.carrier_ghz);
        EigenReport rep = eigen_report(h);
        drop.rayleigh_eigenvalues.assign(rep.eigenvalues.begin(), rep.eigenvalues.end());
    }
    return drop;
}

namespace
{

CampaignResult run_campaign_impl(const SystemConfig &config, bool parallel)
{
    CampaignResult result;
    result.config = config;
    result.derived = derive_campaign(config);
    result.drops.resize(config.drops);

    if (parallel)
    {
        const int workers = resolve_worker_count();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (int i = 0; i < config.drops; i++)
            result.drops[i] = run_drop(config, result.derived, static_cast<std::uint64_t>(i));
    }
    else
    {
        for (int i = 0; i < config.drops; i++)
            result.drops[i] = run_drop(config, result.derived, static_cast<std::uint64_t>(i));
    }

    for (const DropResult &d : result.drops)
        result.degenerate_resamples += d.three_gpp.resamples + d.nyusim.resamples;
    return result;
}

const ModelDropResult *model_result(const DropResult &d, ChannelModel model)
{
    switch (model)
    {
    case ChannelModel::three_gpp:
        return &d.three_gpp;
    case ChannelModel::nyusim:
        return &d.nyusim;
    default:
        return nullptr;
    }
}

} // namespace

CampaignResult run_campaign(const SystemConfig &config)
{
    return run_campaign_impl(config, true);
}

CampaignResult run_campaign_serial(const SystemConfig &config)
{
    return run_campaign_impl(config, false);
}

int resolve_worker_count()
{
    if (const char *env = std::getenv("MMWAVESIM_WORKERS"))
    {
        int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    return omp_get_max_threads();
}

std::vector<double> CampaignResult::eigenvalue_samples(ChannelModel model, int rank) const
{
    std::vector<double> out;
    out.reserve(drops.size());
    for (const DropResult &d : drops)
    {
        const std::vector<double> &ev =
            model == ChannelModel::rayleigh ? d.rayleigh_eigenvalues : model_result(d, model)->eigenvalues;
        if (rank < static_cast<int>(ev.size()))
            out.push_back(ev[rank]);
    }
    return out;
}

std::vector<double> CampaignResult::eigen_ratio_samples(ChannelModel model, int rank) const
{
    std::vector<double> out;
    out.reserve(drops.size());
    for (const DropResult &d : drops)
    {
        const std::vector<double> &ev =
            model == ChannelModel::rayleigh ? d.rayleigh_eigenvalues : model_result(d, model)->eigenvalues;
        if (rank >= static_cast<int>(ev.size()))
            continue;
        double sum = 0.0;
        for (double v : ev)
            sum += v;
        out.push_back(sum > 0.0 ? ev[rank] / sum : 0.0);
    }
    return out;
}

std::vector<double> CampaignResult::se_samples(ChannelModel model, bool hybrid) const
{
    std::vector<double> out;
    for (const DropResult &d : drops)
    {
        const ModelDropResult *m = model_result(d, model);
        if (!m)
            continue;
        const std::vector<double> &se = hybrid ? m->se_hybrid : m->se_bd;
        out.insert(out.end(), se.begin(), se.end());
    }
    return out;
}

double CampaignResult::median_eigen_spread(ChannelModel model) const
{
    std::vector<double> spreads;
    spreads.reserve(drops.size());
    for (const DropResult &d : drops)
    {
        const std::vector<double> &ev =
            model == ChannelModel::rayleigh ? d.rayleigh_eigenvalues : model_result(d, model)->eigenvalues;
        if (ev.empty())
            continue;
        double lo = ev.back();
        spreads.push_back(lo > 0.0 ? ev.front() / lo : std::numeric_limits<double>::infinity());
    }
    return median(std::move(spreads));
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("empirical_cdf: empty sample set");
    std::sort(samples.begin(), samples.end());
    std::vector<std::pair<double, double>> cdf(samples.size());
    const double n = static_cast<double>(samples.size());
    for (std::size_t i = 0; i < samples.size(); i++)
        cdf[i] = {samples[i], static_cast<double>(i + 1) / n};
    return cdf;
}

double median(std::vector<double> samples)
{
    if (samples.empty())
        throw std::invalid_argument("median: empty sample set");
    std::sort(samples.begin(), samples.end());
    std::size_t n = samples.size();
    return n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

} // namespace mmwavesim
