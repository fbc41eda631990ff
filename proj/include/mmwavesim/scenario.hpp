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

#ifndef MMWAVESIM_SCENARIO_HPP
#define MMWAVESIM_SCENARIO_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "mmwavesim/rng.hpp"

namespace mmwavesim
{

enum class Environment
{
    umi_street_canyon,
    uma
};

enum class ChannelModel
{
    three_gpp,
    nyusim,
    rayleigh
};

enum class LinkState
{
    los,
    nlos
};

std::string to_string(Environment e);
std::string to_string(ChannelModel m);
std::string to_string(LinkState s);

// Raised when a configuration cannot be satisfied (e.g. unsolvable link budget).
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

// Large-scale path loss parameters for one environment (both link states).
struct PathLossParams
{
    double ple_los = 2.0;
    double ple_nlos = 3.2;
    double sf_sigma_los_db = 4.0;
    double sf_sigma_nlos_db = 8.0;
    double abg_alpha = 3.53;
    double abg_beta_db = 22.4;
    double abg_gamma = 2.13;

    double ple(LinkState s) const { return s == LinkState::los ? ple_los : ple_nlos; }
    double sf_sigma_db(LinkState s) const { return s == LinkState::los ? sf_sigma_los_db : sf_sigma_nlos_db; }
};

// Per-environment parameter set: path loss plus the NYU LOS-probability
// distance constants d1/d2 used by the squared-form model.
struct EnvironmentParams
{
    PathLossParams path_loss;
    double nyu_los_d1_m = 22.0;
    double nyu_los_d2_m = 120.0;
};

struct ScenarioParams
{
    EnvironmentParams umi;
    EnvironmentParams uma;

    const EnvironmentParams &get(Environment e) const { return e == Environment::umi_street_canyon ? umi : uma; }

    static ScenarioParams defaults();
    static ScenarioParams from_csv(const std::string &path);
    std::string to_csv() const;
};

// Transmit power budget and the coverage rule used to size the cell.
struct LinkBudget
{
    double tx_power_dbm = 30.0;
    double carrier_ghz = 28.0;
    double bandwidth_mhz = 100.0;
    double noise_figure_db = 10.0;
    double bs_element_max_gain_db = 10.0;
    double array_gain_db = 20.0; // aggregate beamforming gain credited when sizing the cell
    double snr_threshold_db = 5.0;
    double coverage_fraction = 0.95;

    void validate() const; // throws ConfigError naming the offending field
};

// BS/UE placement for one link. Azimuth is the BS-to-UE bearing in the BS
// frame (array boresight at 0 deg azimuth, 90 deg zenith).
struct LinkGeometry
{
    double d2d_m = 50.0;
    double azimuth_deg = 0.0;
    double bs_height_m = 10.0;
    double ue_height_m = 1.5;

    double d3d_m() const
    {
        double dh = bs_height_m - ue_height_m;
        return std::sqrt(d2d_m * d2d_m + dh * dh);
    }
    double depart_azimuth_deg() const { return azimuth_deg; }
    double arrive_azimuth_deg() const; // bearing UE -> BS, wrapped
    double depart_zenith_deg() const;  // > 90 deg when the BS is above the UE
    double arrive_zenith_deg() const;
};

// Shared building block of both LOS probability models:
//   p(d) = min(d1/d, 1) * (1 - exp(-d/d2)) + exp(-d/d2)
double los_probability_inner(double d2d_m, double d1_m, double d2_m);

// TR 38.900 Table 7.4.2-1 outdoor models. UMi: d1 = 18 m, d2 = 36 m.
// UMa adds the height-dependent correction for UE heights above 13 m.
double los_probability_3gpp(double d2d_m, Environment env, double ue_height_m = 1.5);

// Squared 3GPP-form expression with NYU-fitted distance constants.
double los_probability_nyusim(double d2d_m, Environment env, const ScenarioParams &params);
double los_probability_nyusim(double d2d_m, Environment env); // shipped default constants

LinkState draw_link_state(RngStream &rng, double p_los);

// Close-in free-space reference distance model:
//   PL = 32.4 + 10 * ple * log10(d3d) + 20 * log10(fc) + sf   (fc in GHz, d3d >= 1 m)
double path_loss_ci(double fc_ghz, double d3d_m, double ple, double sf_db);

// Optional two-slope CI variant: CI up to the breakpoint, steeper slope beyond.
struct TwoSlopeCi
{
    bool enabled = false;
    double breakpoint_m = 160.0;
    double ple_beyond = 4.0;
};
double path_loss_ci_two_slope(double fc_ghz, double d3d_m, double ple, const TwoSlopeCi &ts, double sf_db);

// Alpha-beta-gamma model:
//   PL = 10 * alpha * log10(d3d) + beta + 10 * gamma * log10(fc) + sf
double path_loss_abg(double fc_ghz, double d3d_m, const PathLossParams &params, double sf_db);

double sample_shadow_fading(RngStream &rng, double sigma_db);

// Thermal noise floor plus receiver noise figure, in dBm.
double noise_power_dbm(double bandwidth_mhz, double noise_figure_db);

// Cell radius d_max solving  MeanPL(d_max) + z * sigma = PL_max  for the CI
// model, where z is the standard-normal quantile at the coverage fraction and
// PL_max = tx_power + element gain + array gain - noise power - SNR threshold.
// Throws ConfigError naming the deficit in dB when no radius >= 10 m exists.
double cell_radius_for_coverage(const LinkBudget &budget, const PathLossParams &params, LinkState state);

} // namespace mmwavesim

#endif
