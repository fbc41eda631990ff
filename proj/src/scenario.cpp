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

#include "mmwavesim/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mmwavesim/csv.hpp"

namespace mmwavesim
{

std::string to_string(Environment e)
{
    return e == Environment::umi_street_canyon ? "umi" : "uma";
}

std::string to_string(ChannelModel m)
{
    switch (m)
    {
    case ChannelModel::three_gpp:
        return "3gpp";
    case ChannelModel::nyusim:
        return "nyusim";
    default:
        return "rayleigh";
    }
}

std::string to_string(LinkState s)
{
    return s == LinkState::los ? "los" : "nlos";
}

ScenarioParams ScenarioParams::defaults()
{
    ScenarioParams p;
    p.umi.path_loss = {2.0, 3.2, 4.0, 8.0, 3.53, 22.4, 2.13};
    p.umi.nyu_los_d1_m = 22.0;
    p.umi.nyu_los_d2_m = 120.0;
    p.uma.path_loss = {2.0, 2.9, 4.0, 8.0, 3.908, 13.54, 2.0};
    p.uma.nyu_los_d1_m = 20.0;
    p.uma.nyu_los_d2_m = 160.0;
    return p;
}

double LinkGeometry::arrive_azimuth_deg() const
{
    double a = azimuth_deg + 180.0;
    a = std::fmod(a + 180.0, 360.0);
    if (a < 0.0)
        a += 360.0;
    return a - 180.0;
}

double LinkGeometry::depart_zenith_deg() const
{
    if (d2d_m <= 0.0)
        return bs_height_m >= ue_height_m ? 180.0 : 0.0;
    double el = std::atan((bs_height_m - ue_height_m) / d2d_m);
    return 90.0 + el * 180.0 / std::numbers::pi;
}

double LinkGeometry::arrive_zenith_deg() const
{
    return 180.0 - depart_zenith_deg();
}

double los_probability_inner(double d2d_m, double d1_m, double d2_m)
{
    if (d2d_m < 0.0)
        throw std::invalid_argument("los_probability: distance must be non-negative");
    if (d2d_m <= d1_m)
        return 1.0;
    double decay = std::exp(-d2d_m / d2_m);
    return (d1_m / d2d_m) * (1.0 - decay) + decay;
}

double los_probability_3gpp(double d2d_m, Environment env, double ue_height_m)
{
    if (env == Environment::umi_street_canyon)
        return los_probability_inner(d2d_m, 18.0, 36.0);

    double p = los_probability_inner(d2d_m, 18.0, 63.0);
    if (ue_height_m > 13.0 && d2d_m > 0.0)
    {
        double c = std::pow((std::min(ue_height_m, 23.0) - 13.0) / 10.0, 1.5);
        p *= 1.0 + c * (5.0 / 4.0) * std::pow(d2d_m / 100.0, 3.0) * std::exp(-d2d_m / 150.0);
    }
    return std::min(p, 1.0);
}

double los_probability_nyusim(double d2d_m, Environment env, const ScenarioParams &params)
{
    const EnvironmentParams &ep = params.get(env);
    double inner = los_probability_inner(d2d_m, ep.nyu_los_d1_m, ep.nyu_los_d2_m);
    return inner * inner;
}

double los_probability_nyusim(double d2d_m, Environment env)
{
    static const ScenarioParams defaults = ScenarioParams::defaults();
    return los_probability_nyusim(d2d_m, env, defaults);
}

LinkState draw_link_state(RngStream &rng, double p_los)
{
    if (!(p_los >= 0.0 && p_los <= 1.0))
        throw std::invalid_argument("draw_link_state: probability must lie in [0,1]");
    return rng.uniform() < p_los ? LinkState::los : LinkState::nlos;
}

double path_loss_ci(double fc_ghz, double d3d_m, double ple, double sf_db)
{
    if (d3d_m < 1.0)
        throw std::invalid_argument("path_loss_ci: d3d must be >= 1 m");
    if (!(fc_ghz > 0.0))
        throw std::invalid_argument("path_loss_ci: carrier frequency must be positive");
    return 32.4 + 10.0 * ple * std::log10(d3d_m) + 20.0 * std::log10(fc_ghz) + sf_db;
}

double path_loss_ci_two_slope(double fc_ghz, double d3d_m, double ple, const TwoSlopeCi &ts, double sf_db)
{
    if (!ts.enabled || d3d_m <= ts.breakpoint_m)
        return path_loss_ci(fc_ghz, d3d_m, ple, sf_db);
    return path_loss_ci(fc_ghz, ts.breakpoint_m, ple, 0.0) +
           10.0 * ts.ple_beyond * std::log10(d3d_m / ts.breakpoint_m) + sf_db;
}

double path_loss_abg(double fc_ghz, double d3d_m, const PathLossParams &params, double sf_db)
{
    if (d3d_m < 1.0)
        throw std::invalid_argument("path_loss_abg: d3d must be >= 1 m");
    if (!(fc_ghz > 0.0))
        throw std::invalid_argument("path_loss_abg: carrier frequency must be positive");
    return 10.0 * params.abg_alpha * std::log10(d3d_m) + params.abg_beta_db +
           10.0 * params.abg_gamma * std::log10(fc_ghz) + sf_db;
}

double sample_shadow_fading(RngStream &rng, double sigma_db)
{
    if (sigma_db < 0.0)
        throw std::invalid_argument("sample_shadow_fading: sigma must be non-negative");
    if (sigma_db == 0.0)
        return 0.0;
    return rng.normal(0.0, sigma_db);
}

double noise_power_dbm(double bandwidth_mhz, double noise_figure_db)
{
    if (!(bandwidth_mhz > 0.0))
        throw std::invalid_argument("noise_power_dbm: bandwidth must be positive");
    return -174.0 + 10.0 * std::log10(bandwidth_mhz * 1e6) + noise_figure_db;
}

void LinkBudget::validate() const
{
    if (!(bandwidth_mhz > 0.0))
        throw ConfigError("link budget: bandwidth_mhz must be positive");
    if (!(coverage_fraction > 0.0 && coverage_fraction < 1.0))
        throw ConfigError("link budget: coverage_fraction must lie in (0,1)");
    if (!(carrier_ghz >= 0.5 && carrier_ghz <= 100.0))
        throw ConfigError("link budget: carrier_ghz must lie in [0.5, 100]");
}

double cell_radius_for_coverage(const LinkBudget &budget, const PathLossParams &params, LinkState state)
{
    budget.validate();

    double pl_max = budget.tx_power_dbm + budget.bs_element_max_gain_db + budget.array_gain_db -
                    noise_power_dbm(budget.bandwidth_mhz, budget.noise_figure_db) - budget.snr_threshold_db;
    double z = normal_quantile(budget.coverage_fraction);
    double sigma = params.sf_sigma_db(state);
    double allowed_mean_pl = pl_max - z * sigma;

    const double d_lower = 10.0;
    double pl_at_lower = path_loss_ci(budget.carrier_ghz, d_lower, params.ple(state), 0.0);
    if (allowed_mean_pl <= pl_at_lower)
        throw ConfigError("link budget unsolvable: short by " +
                          std::to_string(pl_at_lower - allowed_mean_pl) + " dB at the 10 m lower bound");

    double exponent = (allowed_mean_pl - 32.4 - 20.0 * std::log10(budget.carrier_ghz)) /
                      (10.0 * params.ple(state));
    return std::pow(10.0, exponent);
}

} // namespace mmwavesim
