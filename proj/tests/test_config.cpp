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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mmwavesim/config.hpp"
#include "mmwavesim/csv.hpp"
#include "mmwavesim/outputs.hpp"

using namespace mmwavesim;

namespace
{
std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path repo_data_dir()
{
    // tests run from build/tests; the data files live in the source tree
    for (std::filesystem::path p : {std::filesystem::path(MMWAVESIM_SOURCE_DIR) / "data"})
        if (std::filesystem::exists(p))
            return p;
    FAIL("data directory not found");
    return {};
}
} // namespace

TEST_CASE("empty config text yields the reference default setup")
{
    SystemConfig c = parse_config_text("");
    CHECK(c.budget.carrier_ghz == 28.0);
    CHECK(c.budget.bandwidth_mhz == 100.0);
    CHECK(c.drops == 1000);
    CHECK(c.users == 3);
    CHECK(c.bs_array.elements() == 256);
    CHECK(c.ue_array.elements() == 8);
    CHECK(c.bs_array.max_gain_db == 10.0);
    CHECK(c.budget.snr_threshold_db == 5.0);
    CHECK(c.budget.coverage_fraction == 0.95);
    CHECK(c.environment == Environment::umi_street_canyon);
    CHECK(c.models.size() == 3);
}

TEST_CASE("drops = 0 is rejected naming the key")
{
    try
    {
        parse_config_text("[campaign]\ndrops = 0\n");
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(std::string(e.what()).find("drops") != std::string::npos);
    }
}

TEST_CASE("unknown keys are rejected with line information")
{
    try
    {
        parse_config_text("[campaign]\nmodle = all\n", "bad.conf");
        FAIL("expected ConfigError");
    }
    catch (const ConfigError &e)
    {
        std::string msg = e.what();
        CHECK(msg.find("modle") != std::string::npos);
        CHECK(msg.find("bad.conf:2") != std::string::npos);
    }
}

TEST_CASE("unknown sections are rejected")
{
    CHECK_THROWS_AS(parse_config_text("[nonsense]\nx = 1\n"), ConfigError);
}

TEST_CASE("malformed lines are rejected")
{
    CHECK_THROWS_AS(parse_config_text("[campaign]\ndrops\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("drops = 5\n"), ConfigError); // key outside section
    CHECK_THROWS_AS(parse_config_text("[campaign\ndrops = 5\n"), ConfigError);
}

TEST_CASE("bad values name key and expectation")
{
    CHECK_THROWS_AS(parse_config_text("[campaign]\nmodel = 4gpp\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[campaign]\ndrops = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[link]\ncoverage_fraction = 1.5\n"), ConfigError);
}

TEST_CASE("missing config file is a ConfigError")
{
    CHECK_THROWS_AS(parse_config("/nonexistent/path.conf"), ConfigError);
}

TEST_CASE("serialize/parse round-trip is idempotent")
{
    SystemConfig c = parse_config_text("[campaign]\nmodel = nyusim\nseed = 99\ndrops = 7\n"
                                       "[geometry]\nbs_height_m = 17.5\n"
                                       "[bs_array]\nrows = 4\ncols = 4\npolarization = single\n");
    std::string text = serialize_config(c);
    SystemConfig c2 = parse_config_text(text);
    CHECK(config_equal(c, c2));
    CHECK(serialize_config(c2) == text);
}

TEST_CASE("auto BS height resolves per environment")
{
    SystemConfig c = parse_config_text("");
    CHECK(c.resolved_bs_height_m() == 10.0);
    c = parse_config_text("[campaign]\nscenario = uma\n");
    CHECK(c.resolved_bs_height_m() == 25.0);
    c = parse_config_text("[geometry]\nbs_height_m = 12.5\n");
    CHECK(c.resolved_bs_height_m() == 12.5);
    c = parse_config_text("[geometry]\nbs_height_m = auto\n");
    CHECK(c.resolved_bs_height_m() == 10.0);
}

TEST_CASE("comments and blank lines are ignored")
{
    SystemConfig c = parse_config_text("# a comment\n\n[campaign]\n; another\ndrops = 4\n");
    CHECK(c.drops == 4);
}

TEST_CASE("shipped scenario params CSV matches the built-in defaults")
{
    ScenarioParams from_file =
        ScenarioParams::from_csv((repo_data_dir() / "scenario_params.csv").string());
    ScenarioParams defaults = ScenarioParams::defaults();
    CHECK(from_file.to_csv() == defaults.to_csv());
    CHECK(slurp((repo_data_dir() / "scenario_params.csv").string()) == defaults.to_csv());
}

TEST_CASE("shipped LSP table CSV matches the built-in defaults")
{
    LspTable from_file = LspTable::from_csv((repo_data_dir() / "lsp_table.csv").string());
    CHECK(from_file.to_csv() == LspTable::defaults().to_csv());
    CHECK(slurp((repo_data_dir() / "lsp_table.csv").string()) == LspTable::defaults().to_csv());
}

TEST_CASE("shipped NYU params CSV matches the built-in defaults")
{
    NyuTable from_file = NyuTable::from_csv((repo_data_dir() / "nyu_params.csv").string());
    CHECK(from_file.to_csv() == NyuTable::defaults().to_csv());
    CHECK(slurp((repo_data_dir() / "nyu_params.csv").string()) == NyuTable::defaults().to_csv());
}

TEST_CASE("shipped ray offsets CSV matches the built-in defaults")
{
    RayOffsets from_file = ray_offsets_from_csv((repo_data_dir() / "ray_offsets.csv").string());
    CHECK(from_file == default_ray_offsets());
    CHECK(slurp((repo_data_dir() / "ray_offsets.csv").string()) ==
          ray_offsets_to_csv(default_ray_offsets()));
}

TEST_CASE("config can override parameter tables from files")
{
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "mmwavesim_cfg_test";
    std::filesystem::create_directories(dir);
    NyuTable t = NyuTable::defaults();
    t.nlos.void_interval_ns = 40.0;
    std::ofstream((dir / "nyu.csv").string()) << t.to_csv();

    SystemConfig c = parse_config_text("[data]\nnyu_params = " + (dir / "nyu.csv").string() + "\n");
    CHECK(c.nyu_table.nlos.void_interval_ns == 40.0);
    CHECK(c.nyu_table.los.void_interval_ns == 25.0);
}

TEST_CASE("csv parser rejects ragged rows and empty files")
{
    CHECK_THROWS(parse_csv("a,b\n1\n", "ragged"));
    CHECK_THROWS(parse_csv("", "empty"));
    CsvTable t = parse_csv("a,b\n# comment\n1,2\n", "ok");
    REQUIRE(t.rows.size() == 1);
    CHECK(t.column("b") == 1);
    CHECK(t.column("missing") == -1);
}

TEST_CASE("output kinds parse and print consistently")
{
    for (OutputKind k : all_output_kinds())
        CHECK(output_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(output_kind_from_string("bogus"), ConfigError);
}

TEST_CASE("emit_outputs writes headers and is byte-stable across reruns")
{
    SystemConfig c;
    c.drops = 4;
    c.seed = 31337;
    CampaignResult r = run_campaign_serial(c);

    std::filesystem::path dir1 = std::filesystem::temp_directory_path() / "mmwavesim_out1";
    std::filesystem::path dir2 = std::filesystem::temp_directory_path() / "mmwavesim_out2";
    std::filesystem::create_directories(dir1);
    std::filesystem::create_directories(dir2);

    RunManifest m;
    m.seed = c.seed;
    m.out_dir = dir1.string();
    std::vector<std::string> files1 = emit_outputs(r, m);
    m.out_dir = dir2.string();
    CampaignResult r2 = run_campaign_serial(c);
    std::vector<std::string> files2 = emit_outputs(r2, m);

    REQUIRE(files1.size() == files2.size());
    REQUIRE(files1.size() == 6); // 5 CSVs + manifest
    for (std::size_t i = 0; i < files1.size(); i++)
        CHECK(slurp(files1[i]) == slurp(files2[i]));

    // every CSV starts with a header row naming columns
    CHECK(slurp(files1[0]).rfind("distance_m,", 0) == 0);
    CHECK(slurp(files1[2]).rfind("eigenvalue_index,", 0) == 0);
    CHECK(slurp(files1[4]).rfind("se_bps_per_hz,", 0) == 0);

    // se_cdfs carries 4 (model, scheme) series x drops x users rows
    std::string se = slurp(files1[4]);
    std::size_t lines = std::count(se.begin(), se.end(), '\n');
    CHECK(lines == 1 + 4 * 4 * 3);
}

TEST_CASE("emitted eigen ratio column sums to 1 in linear units per model")
{
    SystemConfig c;
    c.drops = 6;
    CampaignResult r = run_campaign_serial(c);
    for (ChannelModel m : {ChannelModel::three_gpp, ChannelModel::nyusim, ChannelModel::rayleigh})
    {
        double total = 0.0;
        for (int rank = 0; rank < 8; rank++)
        {
            std::vector<double> s = r.eigen_ratio_samples(m, rank);
            double avg = 0.0;
            for (double v : s)
                avg += v;
            total += avg / s.size();
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
    // the per-report contract behind it:
    for (const DropResult &d : r.drops)
    {
        double sum = 0.0;
        for (double v : d.three_gpp.eigenvalues)
            sum += v;
        double ratio_sum = 0.0;
        for (double v : d.three_gpp.eigenvalues)
            ratio_sum += v / sum;
        CHECK(ratio_sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}
