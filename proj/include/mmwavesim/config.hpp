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

#ifndef MMWAVESIM_CONFIG_HPP
#define MMWAVESIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mmwavesim/antenna.hpp"
#include "mmwavesim/chan3gpp.hpp"
#include "mmwavesim/channyu.hpp"
#include "mmwavesim/scenario.hpp"

namespace mmwavesim
{

// Full experiment description. The default-constructed value reproduces the
// reference setup: 28 GHz carrier, 100 MHz bandwidth, UMi street canyon,
// 8x16 cross-polarized BS array (256 elements, directional, 10 dB max gain),
// 2x2 cross-polarized omni UE array (8 elements), 3 users, 1000 drops.
struct SystemConfig
{
    // [campaign]
    std::vector<ChannelModel> models = {ChannelModel::three_gpp, ChannelModel::nyusim,
                                        ChannelModel::rayleigh};
    Environment environment = Environment::umi_street_canyon;
    int drops = 1000;
    int users = 3;
    std::uint64_t seed = 12345; // documented default seed

    // [link]
    LinkBudget budget;
    LinkState coverage_state = LinkState::nlos; // link state used to size the cell
    double min_distance_m = 10.0;

    // [geometry] (nan = per-environment default: BS 10 m UMi / 25 m UMa, UE 1.5 m)
    double bs_height_m = std::numeric_limits<double>::quiet_NaN();
    double ue_height_m = 1.5;

    // [bs_array] / [ue_array]
    ArrayGeometry bs_array{8, 16, 0.5, Polarization::cross_pol_45,
                           ElementPattern::three_gpp_directional, 10.0};
    ArrayGeometry ue_array{2, 2, 0.5, Polarization::cross_pol_45, ElementPattern::omni, 0.0};

    // [pathloss]
    TwoSlopeCi two_slope;

    // [nyusim]
    double los_boresight_fraction = 0.8889;

    // [data] - optional parameter table overrides (empty = built-in defaults)
    std::string scenario_params_path;
    std::string lsp_table_path;
    std::string nyu_params_path;
    std::string ray_offsets_path;

    // Resolved tables (loaded from the paths above or defaults).
    ScenarioParams scenario_params = ScenarioParams::defaults();
    LspTable lsp_table = LspTable::defaults();
    NyuTable nyu_table = NyuTable::defaults();
    RayOffsets ray_offsets = default_ray_offsets();

    double resolved_bs_height_m() const;
    bool has_model(ChannelModel m) const;

    void validate() const; // throws ConfigError naming the offending key
};

// Parse the sectioned key=value config format. Empty file yields the full
// default config. Unknown sections or keys are rejected; diagnostics carry the
// key name and line number. Missing file throws ConfigError.
SystemConfig parse_config(const std::string &path);
SystemConfig parse_config_text(const std::string &text, const std::string &name = "<config>");

// Serialize every key; parse(serialize(c)) == c.
std::string serialize_config(const SystemConfig &c);

bool config_equal(const SystemConfig &a, const SystemConfig &b);

} // namespace mmwavesim

#endif
