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
//
// CSV readers/writers for the shipped parameter tables. Schemas:
//   scenario params: environment,state,ple,sf_sigma_db,abg_alpha,abg_beta_db,
//                    abg_gamma,los_d1_m,los_d2_m
//   lsp table:       scenario,state,ds_mu_log10s,ds_sigma,asd_mu,asd_sigma,
//                    asa_mu,asa_sigma,zsa_mu,zsa_sigma,k_mu_db,k_sigma_db,
//                    xpr_mu_db,xpr_sigma_db,delay_proportionality,
//                    per_cluster_shadow_db,intra_spread_aod_deg,
//                    intra_spread_aoa_deg,intra_spread_zod_deg,intra_spread_zoa_deg
//   nyu params:      state,tc_decay_ns,subpath_decay_ns,cluster_shadow_sigma_db,
//                    void_interval_ns,lobe_az_spread_deg,lobe_zen_spread_deg,
//                    xpr_mu_db,xpr_sigma_db
//   ray offsets:     offset (20 rows)

#include <stdexcept>

#include "mmwavesim/chan3gpp.hpp"
#include "mmwavesim/channyu.hpp"
#include "mmwavesim/csv.hpp"
#include "mmwavesim/scenario.hpp"

namespace mmwavesim
{

namespace
{

double field_double(const CsvTable &t, const std::vector<std::string> &row, const std::string &col)
{
    int idx = t.column(col);
    if (idx < 0)
        throw std::runtime_error("parameter table: missing column '" + col + "'");
    try
    {
        return std::stod(row[idx]);
    }
    catch (...)
    {
        throw std::runtime_error("parameter table: bad number '" + row[idx] + "' in column '" + col +
                                 "'");
    }
}

std::string field_string(const CsvTable &t, const std::vector<std::string> &row, const std::string &col)
{
    int idx = t.column(col);
    if (idx < 0)
        throw std::runtime_error("parameter table: missing column '" + col + "'");
    return row[idx];
}

Environment env_from(const std::string &s)
{
    if (s == "umi")
        return Environment::umi_street_canyon;
    if (s == "uma")
        return Environment::uma;
    throw std::runtime_error("parameter table: unknown environment '" + s + "'");
}

LinkState state_from(const std::string &s)
{
    if (s == "los")
        return LinkState::los;
    if (s == "nlos")
        return LinkState::nlos;
    throw std::runtime_error("parameter table: unknown state '" + s + "'");
}

} // namespace

ScenarioParams ScenarioParams::from_csv(const std::string &path)
{
    CsvTable t = read_csv(path);
    ScenarioParams p = ScenarioParams::defaults();
    for (const auto &row : t.rows)
    {
        Environment env = env_from(field_string(t, row, "environment"));
        LinkState state = state_from(field_string(t, row, "state"));
        EnvironmentParams &ep = env == Environment::umi_street_canyon ? p.umi : p.uma;

        double ple = field_double(t, row, "ple");
        double sf = field_double(t, row, "sf_sigma_db");
        if (state == LinkState::los)
        {
            ep.path_loss.ple_los = ple;
            ep.path_loss.sf_sigma_los_db = sf;
        }
        else
        {
            ep.path_loss.ple_nlos = ple;
            ep.path_loss.sf_sigma_nlos_db = sf;
            ep.path_loss.abg_alpha = field_double(t, row, "abg_alpha");
            ep.path_loss.abg_beta_db = field_double(t, row, "abg_beta_db");
            ep.path_loss.abg_gamma = field_double(t, row, "abg_gamma");
        }
        ep.nyu_los_d1_m = field_double(t, row, "los_d1_m");
        ep.nyu_los_d2_m = field_double(t, row, "los_d2_m");
    }
    return p;
}

std::string ScenarioParams::to_csv() const
{
    std::string out = "environment,state,ple,sf_sigma_db,abg_alpha,abg_beta_db,abg_gamma,"
                      "los_d1_m,los_d2_m\n";
    auto row = [&](const char *env, const char *state, const EnvironmentParams &ep, bool los) {
        const PathLossParams &pl = ep.path_loss;
        out += std::string(env) + "," + state + "," +
               format_double(los ? pl.ple_los : pl.ple_nlos) + "," +
               format_double(los ? pl.sf_sigma_los_db : pl.sf_sigma_nlos_db) + "," +
               format_double(pl.abg_alpha) + "," + format_double(pl.abg_beta_db) + "," +
               format_double(pl.abg_gamma) + "," + format_double(ep.nyu_los_d1_m) + "," +
               format_double(ep.nyu_los_d2_m) + "\n";
    };
    row("umi", "los", umi, true);
    row("umi", "nlos", umi, false);
    row("uma", "los", uma, true);
    row("uma", "nlos", uma, false);
    return out;
}

LspTable LspTable::from_csv(const std::string &path)
{
    CsvTable t = read_csv(path);
    LspTable table = LspTable::defaults();
    for (const auto &row : t.rows)
    {
        Environment env = env_from(field_string(t, row, "scenario"));
        LinkState state = state_from(field_string(t, row, "state"));
        LspStats s;
        s.ds_mu_log10_s = field_double(t, row, "ds_mu_log10s");
        s.ds_sigma = field_double(t, row, "ds_sigma");
        s.asd_mu_log10_deg = field_double(t, row, "asd_mu");
        s.asd_sigma = field_double(t, row, "asd_sigma");
        s.asa_mu_log10_deg = field_double(t, row, "asa_mu");
        s.asa_sigma = field_double(t, row, "asa_sigma");
        s.zsa_mu_log10_deg = field_double(t, row, "zsa_mu");
        s.zsa_sigma = field_double(t, row, "zsa_sigma");
        s.k_mu_db = field_double(t, row, "k_mu_db");
        s.k_sigma_db = field_double(t, row, "k_sigma_db");
        s.xpr_mu_db = field_double(t, row, "xpr_mu_db");
        s.xpr_sigma_db = field_double(t, row, "xpr_sigma_db");
        s.delay_proportionality = field_double(t, row, "delay_proportionality");
        s.per_cluster_shadow_db = field_double(t, row, "per_cluster_shadow_db");
        s.intra_spread_aod_deg = field_double(t, row, "intra_spread_aod_deg");
        s.intra_spread_aoa_deg = field_double(t, row, "intra_spread_aoa_deg");
        s.intra_spread_zod_deg = field_double(t, row, "intra_spread_zod_deg");
        s.intra_spread_zoa_deg = field_double(t, row, "intra_spread_zoa_deg");

        if (env == Environment::umi_street_canyon)
            (state == LinkState::los ? table.umi_los : table.umi_nlos) = s;
        else
            (state == LinkState::los ? table.uma_los : table.uma_nlos) = s;
    }
    return table;
}

std::string LspTable::to_csv() const
{
    std::string out =
        "scenario,state,ds_mu_log10s,ds_sigma,asd_mu,asd_sigma,asa_mu,asa_sigma,zsa_mu,zsa_sigma,"
        "k_mu_db,k_sigma_db,xpr_mu_db,xpr_sigma_db,delay_proportionality,per_cluster_shadow_db,"
        "intra_spread_aod_deg,intra_spread_aoa_deg,intra_spread_zod_deg,intra_spread_zoa_deg\n";
    auto row = [&](const char *env, const char *state, const LspStats &s) {
        out += std::string(env) + "," + state;
        for (double v : {s.ds_mu_log10_s, s.ds_sigma, s.asd_mu_log10_deg, s.asd_sigma,
                         s.asa_mu_log10_deg, s.asa_sigma, s.zsa_mu_log10_deg, s.zsa_sigma, s.k_mu_db,
                         s.k_sigma_db, s.xpr_mu_db, s.xpr_sigma_db, s.delay_proportionality,
                         s.per_cluster_shadow_db, s.intra_spread_aod_deg, s.intra_spread_aoa_deg,
                         s.intra_spread_zod_deg, s.intra_spread_zoa_deg})
            out += "," + format_double(v);
        out += "\n";
    };
    row("umi", "los", umi_los);
    row("umi", "nlos", umi_nlos);
    row("uma", "los", uma_los);
    row("uma", "nlos", uma_nlos);
    return out;
}

NyuTable NyuTable::from_csv(const std::string &path)
{
    CsvTable t = read_csv(path);
    NyuTable table = NyuTable::defaults();
    for (const auto &row : t.rows)
    {
        LinkState state = state_from(field_string(t, row, "state"));
        NyuParams p;
        p.tc_decay_ns = field_double(t, row, "tc_decay_ns");
        p.subpath_decay_ns = field_double(t, row, "subpath_decay_ns");
        p.cluster_shadow_sigma_db = field_double(t, row, "cluster_shadow_sigma_db");
        p.void_interval_ns = field_double(t, row, "void_interval_ns");
        p.lobe_az_spread_deg = field_double(t, row, "lobe_az_spread_deg");
        p.lobe_zen_spread_deg = field_double(t, row, "lobe_zen_spread_deg");
        p.xpr_mu_db = field_double(t, row, "xpr_mu_db");
        p.xpr_sigma_db = field_double(t, row, "xpr_sigma_db");
        (state == LinkState::los ? table.los : table.nlos) = p;
    }
    return table;
}

std::string NyuTable::to_csv() const
{
    std::string out = "state,tc_decay_ns,subpath_decay_ns,cluster_shadow_sigma_db,void_interval_ns,"
                      "lobe_az_spread_deg,lobe_zen_spread_deg,xpr_mu_db,xpr_sigma_db\n";
    auto row = [&](const char *state, const NyuParams &p) {
        out += state;
        for (double v : {p.tc_decay_ns, p.subpath_decay_ns, p.cluster_shadow_sigma_db,
                         p.void_interval_ns, p.lobe_az_spread_deg, p.lobe_zen_spread_deg, p.xpr_mu_db,
                         p.xpr_sigma_db})
            out += "," + format_double(v);
        out += "\n";
    };
    row("los", los);
    row("nlos", nlos);
    return out;
}

RayOffsets ray_offsets_from_csv(const std::string &path)
{
    CsvTable t = read_csv(path);
    int col = t.column("offset");
    if (col < 0)
        throw std::runtime_error("ray offsets: missing column 'offset'");
    if (t.rows.size() != 20)
        throw std::runtime_error("ray offsets: expected 20 rows, got " + std::to_string(t.rows.size()));
    RayOffsets offsets{};
    for (std::size_t i = 0; i < 20; i++)
        offsets[i] = std::stod(t.rows[i][col]);
    return offsets;
}

std::string ray_offsets_to_csv(const RayOffsets &offsets)
{
    std::string out = "offset\n";
    for (double v : offsets)
        out += format_double(v) + "\n";
    return out;
}

} // namespace mmwavesim
