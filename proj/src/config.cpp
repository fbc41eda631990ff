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

#include "mmwavesim/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "mmwavesim/csv.hpp"

namespace mmwavesim
{

double SystemConfig::resolved_bs_height_m() const
{
    if (!std::isnan(bs_height_m))
        return bs_height_m;
    return environment == Environment::umi_street_canyon ? 10.0 : 25.0;
}

bool SystemConfig::has_model(ChannelModel m) const
{
    for (ChannelModel x : models)
        if (x == m)
            return true;
    return false;
}

void SystemConfig::validate() const
{
    if (drops < 1)
        throw ConfigError("config: drops must be >= 1");
    if (users < 1)
        throw ConfigError("config: users must be >= 1");
    if (models.empty())
        throw ConfigError("config: model list must not be empty");
    if (!(min_distance_m > 0.0))
        throw ConfigError("config: min_distance_m must be positive");
    if (!(los_boresight_fraction >= 0.0 && los_boresight_fraction < 1.0))
        throw ConfigError("config: los_boresight_fraction must lie in [0,1)");
    if (!(ue_height_m > 0.0))
        throw ConfigError("config: ue_height_m must be positive");
    budget.validate();
    bs_array.validate();
    ue_array.validate();
}

namespace
{

std::string trim(const std::string &s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct KeyHandler
{
    std::function<void(SystemConfig &, const std::string &)> set;
    std::function<std::string(const SystemConfig &)> get;
};

[[noreturn]] void bad_value(const std::string &key, const std::string &value, const std::string &expect)
{
    throw ConfigError("config key '" + key + "': invalid value '" + value + "' (" + expect + ")");
}

double parse_double(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (...)
    {
        bad_value(key, value, "expected a number");
    }
}

std::int64_t parse_int(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (...)
    {
        bad_value(key, value, "expected an integer");
    }
}

std::uint64_t parse_u64(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (...)
    {
        bad_value(key, value, "expected an unsigned integer");
    }
}

bool parse_bool(const std::string &key, const std::string &value)
{
    if (value == "true" || value == "1" || value == "on")
        return true;
    if (value == "false" || value == "0" || value == "off")
        return false;
    bad_value(key, value, "expected true/false");
}

std::vector<ChannelModel> parse_models(const std::string &key, const std::string &value)
{
    if (value == "all")
        return {ChannelModel::three_gpp, ChannelModel::nyusim, ChannelModel::rayleigh};
    if (value == "3gpp")
        return {ChannelModel::three_gpp};
    if (value == "nyusim")
        return {ChannelModel::nyusim};
    if (value == "rayleigh")
        return {ChannelModel::rayleigh};
    bad_value(key, value, "expected 3gpp|nyusim|rayleigh|all");
}

std::string models_to_string(const std::vector<ChannelModel> &models)
{
    if (models.size() == 3)
        return "all";
    return models.empty() ? "all" : to_string(models[0]);
}

Environment parse_environment(const std::string &key, const std::string &value)
{
    if (value == "umi")
        return Environment::umi_street_canyon;
    if (value == "uma")
        return Environment::uma;
    bad_value(key, value, "expected umi|uma");
}

LinkState parse_state(const std::string &key, const std::string &value)
{
    if (value == "los")
        return LinkState::los;
    if (value == "nlos")
        return LinkState::nlos;
    bad_value(key, value, "expected los|nlos");
}

Polarization parse_polarization(const std::string &key, const std::string &value)
{
    if (value == "cross")
        return Polarization::cross_pol_45;
    if (value == "single")
        return Polarization::single;
    bad_value(key, value, "expected cross|single");
}

ElementPattern parse_pattern(const std::string &key, const std::string &value)
{
    if (value == "directional")
        return ElementPattern::three_gpp_directional;
    if (value == "omni")
        return ElementPattern::omni;
    bad_value(key, value, "expected directional|omni");
}

std::string fmt_height(double v)
{
    return std::isnan(v) ? "auto" : format_double(v);
}

// Ordered (section, key) -> handler registry; the order defines the
// serialization layout.
using Registry = std::vector<std::pair<std::string, KeyHandler>>;

void add_array_keys(Registry &reg, const std::string &section,
                    ArrayGeometry SystemConfig::*member)
{
    auto arr = [member](SystemConfig &c) -> ArrayGeometry & { return c.*member; };
    auto carr = [member](const SystemConfig &c) -> const ArrayGeometry & { return c.*member; };
    reg.push_back({section + ".rows",
                   {[arr](SystemConfig &c, const std::string &v) {
                        arr(c).rows = static_cast<int>(parse_int("rows", v));
                    },
                    [carr](const SystemConfig &c) { return std::to_string(carr(c).rows); }}});
    reg.push_back({section + ".cols",
                   {[arr](SystemConfig &c, const std::string &v) {
                        arr(c).cols = static_cast<int>(parse_int("cols", v));
                    },
                    [carr](const SystemConfig &c) { return std::to_string(carr(c).cols); }}});
    reg.push_back({section + ".spacing_wavelengths",
                   {[arr](SystemConfig &c, const std::string &v) {
                        arr(c).spacing_wavelengths = parse_double("spacing_wavelengths", v);
                    },
                    [carr](const SystemConfig &c) {
                        return format_double(carr(c).spacing_wavelengths);
                    }}});
    reg.push_back({section + ".polarization",
                   {[arr](SystemConfig &c, const std::string &v) {
                        arr(c).polarization = parse_polarization("polarization", v);
                    },
                    [carr](const SystemConfig &c) {
                        return carr(c).polarization == Polarization::cross_pol_45 ? "cross" : "single";
                    }}});
    reg.push_back({section + ".pattern",
                   {[arr](SystemConfig &c, const std::string &v) {
                        arr(c).pattern = parse_pattern("pattern", v);
                    },
                    [carr](const SystemConfig &c) {
                        return carr(c).pattern == ElementPattern::three_gpp_directional ? "directional"
                                                                                        : "omni";
                    }}});
    reg.push_back({section + ".max_gain_db",
                   {[arr](SystemConfig &c, const std::string &v) {
                        arr(c).max_gain_db = parse_double("max_gain_db", v);
                    },
                    [carr](const SystemConfig &c) { return format_double(carr(c).max_gain_db); }}});
}

Registry build_registry()
{
    Registry reg;
    auto add_double = [&reg](const std::string &path, double SystemConfig::*m) {
        reg.push_back({path,
                       {[m, path](SystemConfig &c, const std::string &v) { c.*m = parse_double(path, v); },
                        [m](const SystemConfig &c) { return format_double(c.*m); }}});
    };

    reg.push_back({"campaign.model",
                   {[](SystemConfig &c, const std::string &v) { c.models = parse_models("model", v); },
                    [](const SystemConfig &c) { return models_to_string(c.models); }}});
    reg.push_back({"campaign.scenario",
                   {[](SystemConfig &c, const std::string &v) {
                        c.environment = parse_environment("scenario", v);
                    },
                    [](const SystemConfig &c) { return to_string(c.environment); }}});
    reg.push_back({"campaign.drops",
                   {[](SystemConfig &c, const std::string &v) {
                        c.drops = static_cast<int>(parse_int("drops", v));
                    },
                    [](const SystemConfig &c) { return std::to_string(c.drops); }}});
    reg.push_back({"campaign.users",
                   {[](SystemConfig &c, const std::string &v) {
                        c.users = static_cast<int>(parse_int("users", v));
                    },
                    [](const SystemConfig &c) { return std::to_string(c.users); }}});
    reg.push_back({"campaign.seed",
                   {[](SystemConfig &c, const std::string &v) { c.seed = parse_u64("seed", v); },
                    [](const SystemConfig &c) { return std::to_string(c.seed); }}});

    reg.push_back({"link.carrier_ghz",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.carrier_ghz = parse_double("carrier_ghz", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.carrier_ghz); }}});
    reg.push_back({"link.bandwidth_mhz",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.bandwidth_mhz = parse_double("bandwidth_mhz", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.bandwidth_mhz); }}});
    reg.push_back({"link.tx_power_dbm",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.tx_power_dbm = parse_double("tx_power_dbm", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.tx_power_dbm); }}});
    reg.push_back({"link.noise_figure_db",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.noise_figure_db = parse_double("noise_figure_db", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.noise_figure_db); }}});
    reg.push_back({"link.bs_element_max_gain_db",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.bs_element_max_gain_db = parse_double("bs_element_max_gain_db", v);
                    },
                    [](const SystemConfig &c) {
                        return format_double(c.budget.bs_element_max_gain_db);
                    }}});
    reg.push_back({"link.array_gain_db",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.array_gain_db = parse_double("array_gain_db", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.array_gain_db); }}});
    reg.push_back({"link.snr_threshold_db",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.snr_threshold_db = parse_double("snr_threshold_db", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.snr_threshold_db); }}});
    reg.push_back({"link.coverage_fraction",
                   {[](SystemConfig &c, const std::string &v) {
                        c.budget.coverage_fraction = parse_double("coverage_fraction", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.budget.coverage_fraction); }}});
    reg.push_back({"link.coverage_state",
                   {[](SystemConfig &c, const std::string &v) {
                        c.coverage_state = parse_state("coverage_state", v);
                    },
                    [](const SystemConfig &c) { return to_string(c.coverage_state); }}});
    add_double("link.min_distance_m", &SystemConfig::min_distance_m);

    reg.push_back({"geometry.bs_height_m",
                   {[](SystemConfig &c, const std::string &v) {
                        c.bs_height_m = v == "auto" ? std::numeric_limits<double>::quiet_NaN()
                                                    : parse_double("bs_height_m", v);
                    },
                    [](const SystemConfig &c) { return fmt_height(c.bs_height_m); }}});
    add_double("geometry.ue_height_m", &SystemConfig::ue_height_m);

    add_array_keys(reg, "bs_array", &SystemConfig::bs_array);
    add_array_keys(reg, "ue_array", &SystemConfig::ue_array);

    reg.push_back({"pathloss.two_slope_enabled",
                   {[](SystemConfig &c, const std::string &v) {
                        c.two_slope.enabled = parse_bool("two_slope_enabled", v);
                    },
                    [](const SystemConfig &c) {
                        return c.two_slope.enabled ? std::string("true") : std::string("false");
                    }}});
    reg.push_back({"pathloss.two_slope_breakpoint_m",
                   {[](SystemConfig &c, const std::string &v) {
                        c.two_slope.breakpoint_m = parse_double("two_slope_breakpoint_m", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.two_slope.breakpoint_m); }}});
    reg.push_back({"pathloss.two_slope_ple_beyond",
                   {[](SystemConfig &c, const std::string &v) {
                        c.two_slope.ple_beyond = parse_double("two_slope_ple_beyond", v);
                    },
                    [](const SystemConfig &c) { return format_double(c.two_slope.ple_beyond); }}});

    add_double("nyusim.los_boresight_fraction", &SystemConfig::los_boresight_fraction);

    auto add_path = [&reg](const std::string &path, std::string SystemConfig::*m) {
        reg.push_back({path,
                       {[m](SystemConfig &c, const std::string &v) { c.*m = v; },
                        [m](const SystemConfig &c) { return c.*m; }}});
    };
    add_path("data.scenario_params", &SystemConfig::scenario_params_path);
    add_path("data.lsp_table", &SystemConfig::lsp_table_path);
    add_path("data.nyu_params", &SystemConfig::nyu_params_path);
    add_path("data.ray_offsets", &SystemConfig::ray_offsets_path);

    return reg;
}

const Registry &registry()
{
    static const Registry reg = build_registry();
    return reg;
}

void load_tables(SystemConfig &c)
{
    if (!c.scenario_params_path.empty())
        c.scenario_params = ScenarioParams::from_csv(c.scenario_params_path);
    if (!c.lsp_table_path.empty())
        c.lsp_table = LspTable::from_csv(c.lsp_table_path);
    if (!c.nyu_params_path.empty())
        c.nyu_table = NyuTable::from_csv(c.nyu_params_path);
    if (!c.ray_offsets_path.empty())
        c.ray_offsets = ray_offsets_from_csv(c.ray_offsets_path);
}

} // namespace

SystemConfig parse_config_text(const std::string &text, const std::string &name)
{
    SystemConfig c;
    const Registry &reg = registry();

    std::stringstream ss(text);
    std::string line, section;
    int line_no = 0;
    while (std::getline(ss, line))
    {
        line_no++;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';')
            continue;
        if (s.front() == '[')
        {
            if (s.back() != ']')
                throw ConfigError(name + ":" + std::to_string(line_no) + ": malformed section header");
            section = trim(s.substr(1, s.size() - 2));
            bool known = false;
            for (const auto &[path, h] : reg)
                known = known || path.rfind(section + ".", 0) == 0;
            if (!known)
                throw ConfigError(name + ":" + std::to_string(line_no) + ": unknown section '" +
                                  section + "'");
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (section.empty())
            throw ConfigError(name + ":" + std::to_string(line_no) + ": key '" + key +
                              "' outside any section");

        std::string path = section + "." + key;
        const KeyHandler *handler = nullptr;
        for (const auto &[p, h] : reg)
            if (p == path)
            {
                handler = &h;
                break;
            }
        if (!handler)
            throw ConfigError(name + ":" + std::to_string(line_no) + ": unknown key '" + path + "'");
        try
        {
            handler->set(c, value);
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(name + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }

    load_tables(c);
    c.validate();
    return c;
}

SystemConfig parse_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::string serialize_config(const SystemConfig &c)
{
    std::string out;
    std::string section;
    for (const auto &[path, h] : registry())
    {
        std::string sec = path.substr(0, path.find('.'));
        std::string key = path.substr(path.find('.') + 1);
        if (sec != section)
        {
            if (!out.empty())
                out += "\n";
            out += "[" + sec + "]\n";
            section = sec;
        }
        out += key + " = " + h.get(c) + "\n";
    }
    return out;
}

bool config_equal(const SystemConfig &a, const SystemConfig &b)
{
    return serialize_config(a) == serialize_config(b);
}

} // namespace mmwavesim
