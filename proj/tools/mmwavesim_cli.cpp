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

#include <clocale>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmwavesim/outputs.hpp"
#include "mmwavesim/version.hpp"

using namespace mmwavesim;

namespace
{

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size())
    {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos)
        {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void print_summary(const CampaignResult &r)
{
    std::printf("cell radius: %.2f m, noise power: %.2f dBm, drops: %d, users: %d\n",
                r.derived.cell_radius_m, 10.0 * std::log10(r.derived.noise_power_mw), r.config.drops,
                r.config.users);
    for (ChannelModel m : {ChannelModel::three_gpp, ChannelModel::nyusim, ChannelModel::rayleigh})
    {
        if (!r.config.has_model(m))
            continue;
        std::printf("  %-8s median eigen spread (l_max/l_min): %.4g\n", to_string(m).c_str(),
                    r.median_eigen_spread(m));
    }
    for (ChannelModel m : {ChannelModel::three_gpp, ChannelModel::nyusim})
    {
        if (!r.config.has_model(m))
            continue;
        std::vector<double> h = r.se_samples(m, true);
        std::vector<double> b = r.se_samples(m, false);
        if (!h.empty())
            std::printf("  %-8s median SE: hybrid %.3f bps/Hz, bd %.3f bps/Hz\n",
                        to_string(m).c_str(), median(std::move(h)), median(std::move(b)));
    }
    if (r.degenerate_resamples > 0)
        std::printf("  degenerate drops resampled: %d\n", r.degenerate_resamples);
}

} // namespace

int main(int argc, char **argv)
{
    // Deterministic numeric formatting and BLAS execution regardless of the
    // host environment; users may still override explicitly.
    std::setlocale(LC_ALL, "C");
    setenv("OPENBLAS_NUM_THREADS", "1", 0);

    CLI::App app{"Statistical mmWave channel simulator and MU-MIMO evaluation harness"};
    app.set_version_flag("--version", kVersion);

    std::string config_path, model, scenario, out_dir = ".", outputs_list;
    std::uint64_t seed = 0;
    int drops = -1, users = -1;
    bool quiet = false;

    app.add_option("--config", config_path, "Configuration file (sectioned key = value)")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "Override the campaign seed");
    app.add_option("--model", model, "Channel model: 3gpp, nyusim, rayleigh or all");
    app.add_option("--scenario", scenario, "Scenario: umi or uma");
    app.add_option("--drops", drops, "Number of Monte Carlo drops");
    app.add_option("--users", users, "Users per drop");
    app.add_option("--out", out_dir, "Output directory (must exist)");
    app.add_option("--outputs", outputs_list,
                   "Comma-separated subset of: los-prob-curves, pathloss-curves, eigen-ratios, "
                   "eigen-cdfs, se-cdfs (default: all)");
    app.add_flag("--quiet", quiet, "Suppress the run summary");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e); // prints the message; 0 for --help/--version
        return code == 0 ? 0 : 1;
    }

    SystemConfig config;
    RunManifest manifest;
    try
    {
        if (!config_path.empty())
            config = parse_config(config_path);
        if (app.count("--seed"))
            config.seed = seed;
        if (!model.empty())
        {
            SystemConfig override_probe =
                parse_config_text("[campaign]\nmodel = " + model + "\n", "--model");
            config.models = override_probe.models;
        }
        if (!scenario.empty())
        {
            SystemConfig override_probe =
                parse_config_text("[campaign]\nscenario = " + scenario + "\n", "--scenario");
            config.environment = override_probe.environment;
        }
        if (drops >= 0)
            config.drops = drops;
        if (users >= 0)
            config.users = users;
        config.validate();

        manifest.config_path = config_path;
        manifest.seed = config.seed;
        manifest.out_dir = out_dir;
        if (!outputs_list.empty())
        {
            manifest.outputs.clear();
            for (const std::string &name : split_list(outputs_list))
                manifest.outputs.insert(output_kind_from_string(name));
        }
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    }

    try
    {
        CampaignResult result = run_campaign(config);
        std::vector<std::string> files = emit_outputs(result, manifest);
        if (!quiet)
        {
            print_summary(result);
            for (const std::string &f : files)
                std::printf("wrote %s\n", f.c_str());
        }
        return 0;
    }
    catch (const ConfigError &e)
    {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 1;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 2;
    }
}
