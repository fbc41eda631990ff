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

#include "mmwavesim/outputs.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "mmwavesim/csv.hpp"
#include "mmwavesim/version.hpp"

namespace mmwavesim
{

namespace
{

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file for writing: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string los_prob_csv()
{
    std::string out = "distance_m,p_3gpp_umi,p_nyu_umi,p_3gpp_uma,p_nyu_uma\n";
    for (int d = 1; d <= 500; d++)
    {
        double dd = static_cast<double>(d);
        out += format_double(dd) + "," +
               format_double(los_probability_3gpp(dd, Environment::umi_street_canyon)) + "," +
               format_double(los_probability_nyusim(dd, Environment::umi_street_canyon)) + "," +
               format_double(los_probability_3gpp(dd, Environment::uma)) + "," +
               format_double(los_probability_nyusim(dd, Environment::uma)) + "\n";
    }
    return out;
}

std::string pathloss_csv(const SystemConfig &config)
{
    const PathLossParams &pl = config.scenario_params.get(config.environment).path_loss;
    double fc = config.budget.carrier_ghz;
    std::string out = "distance_m,pl_ci_los_db,pl_ci_nlos_db,pl_abg_nlos_db\n";
    for (int d = 1; d <= 500; d++)
    {
        double dd = static_cast<double>(d);
        out += format_double(dd) + "," + format_double(path_loss_ci(fc, dd, pl.ple_los, 0.0)) + "," +
               format_double(path_loss_ci(fc, dd, pl.ple_nlos, 0.0)) + "," +
               format_double(path_loss_abg(fc, dd, pl, 0.0)) + "\n";
    }
    return out;
}

std::vector<ChannelModel> eigen_models(const CampaignResult &r)
{
    std::vector<ChannelModel> models;
    for (ChannelModel m :
         {ChannelModel::three_gpp, ChannelModel::nyusim, ChannelModel::rayleigh})
        if (r.config.has_model(m))
            models.push_back(m);
    return models;
}

// Mean ratios per rank: means preserve the per-report sum-to-1 identity, so
// the linear column sums to exactly 1 per model.
std::string eigen_ratios_csv(const CampaignResult &r)
{
    std::string out = "eigenvalue_index,model,mean_ratio_linear,mean_ratio_db\n";
    for (ChannelModel m : eigen_models(r))
    {
        int n_ranks = static_cast<int>(std::min(r.config.bs_array.elements(),
                                                r.config.ue_array.elements()));
        for (int rank = 0; rank < n_ranks; rank++)
        {
            std::vector<double> samples = r.eigen_ratio_samples(m, rank);
            if (samples.empty())
                continue;
            double avg = 0.0;
            for (double v : samples)
                avg += v;
            avg /= static_cast<double>(samples.size());
            out += std::to_string(rank + 1) + "," + to_string(m) + "," + format_double(avg) + "," +
                   format_double(10.0 * std::log10(std::max(avg, 1e-300))) + "\n";
        }
    }
    return out;
}

std::string eigen_cdfs_csv(const CampaignResult &r)
{
    std::string out = "eigenvalue_linear,cumulative_probability,eigenvalue_rank,model\n";
    for (ChannelModel m : eigen_models(r))
    {
        for (int rank = 0; rank < 3; rank++)
        {
            std::vector<double> samples = r.eigenvalue_samples(m, rank);
            if (samples.empty())
                continue;
            for (const auto &[value, prob] : empirical_cdf(std::move(samples)))
                out += format_double(value) + "," + format_double(prob) + "," +
                       std::to_string(rank + 1) + "," + to_string(m) + "\n";
        }
    }
    return out;
}

std::string se_cdfs_csv(const CampaignResult &r)
{
    std::string out = "se_bps_per_hz,cumulative_probability,model,scheme\n";
    for (ChannelModel m : {ChannelModel::three_gpp, ChannelModel::nyusim})
    {
        if (!r.config.has_model(m))
            continue;
        for (bool hybrid : {true, false})
        {
            std::vector<double> samples = r.se_samples(m, hybrid);
            if (samples.empty())
                continue;
            for (const auto &[value, prob] : empirical_cdf(std::move(samples)))
                out += format_double(value) + "," + format_double(prob) + "," + to_string(m) + "," +
                       (hybrid ? "hybrid" : "bd") + "\n";
        }
    }
    return out;
}

std::string manifest_json(const CampaignResult &r, const RunManifest &m,
                          const std::vector<std::string> &file_names)
{
    nlohmann::ordered_json j;
    j["tool"] = "mmwavesim";
    j["version"] = kVersion;
    j["seed"] = m.seed;
    j["config_path"] = m.config_path;
    j["cell_radius_m"] = r.derived.cell_radius_m;
    j["noise_power_dbm"] = 10.0 * std::log10(r.derived.noise_power_mw);
    j["drops"] = r.config.drops;
    j["users"] = r.config.users;
    j["degenerate_resamples"] = r.degenerate_resamples;
    j["outputs"] = file_names; // names only, so reruns into any directory compare equal
    j["config"] = serialize_config(r.config);
    return j.dump(2) + "\n";
}

} // namespace

OutputKind output_kind_from_string(const std::string &s)
{
    if (s == "los-prob-curves")
        return OutputKind::los_prob_curves;
    if (s == "pathloss-curves")
        return OutputKind::pathloss_curves;
    if (s == "eigen-ratios")
        return OutputKind::eigen_ratios;
    if (s == "eigen-cdfs")
        return OutputKind::eigen_cdfs;
    if (s == "se-cdfs")
        return OutputKind::se_cdfs;
    throw ConfigError("unknown output kind '" + s +
                      "' (expected los-prob-curves|pathloss-curves|eigen-ratios|eigen-cdfs|se-cdfs)");
}

std::string to_string(OutputKind k)
{
    switch (k)
    {
    case OutputKind::los_prob_curves:
        return "los-prob-curves";
    case OutputKind::pathloss_curves:
        return "pathloss-curves";
    case OutputKind::eigen_ratios:
        return "eigen-ratios";
    case OutputKind::eigen_cdfs:
        return "eigen-cdfs";
    default:
        return "se-cdfs";
    }
}

std::set<OutputKind> all_output_kinds()
{
    return {OutputKind::los_prob_curves, OutputKind::pathloss_curves, OutputKind::eigen_ratios,
            OutputKind::eigen_cdfs, OutputKind::se_cdfs};
}

std::vector<std::string> emit_outputs(const CampaignResult &result, const RunManifest &manifest)
{
    std::vector<std::string> written;
    std::vector<std::string> names;
    auto emit = [&](OutputKind kind, const std::string &file, const std::string &content) {
        if (!manifest.outputs.count(kind))
            return;
        std::string path = manifest.out_dir + "/" + file;
        write_file(path, content);
        written.push_back(path);
        names.push_back(file);
    };

    emit(OutputKind::los_prob_curves, "los_prob.csv", los_prob_csv());
    emit(OutputKind::pathloss_curves, "pathloss.csv", pathloss_csv(result.config));
    emit(OutputKind::eigen_ratios, "eigen_ratios.csv", eigen_ratios_csv(result));
    emit(OutputKind::eigen_cdfs, "eigen_cdfs.csv", eigen_cdfs_csv(result));
    emit(OutputKind::se_cdfs, "se_cdfs.csv", se_cdfs_csv(result));

    std::string manifest_path = manifest.out_dir + "/run_manifest.json";
    write_file(manifest_path, manifest_json(result, manifest, names));
    written.push_back(manifest_path);
    return written;
}

} // namespace mmwavesim
