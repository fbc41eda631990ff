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

#ifndef MMWAVESIM_OUTPUTS_HPP
#define MMWAVESIM_OUTPUTS_HPP

#include <set>
#include <string>
#include <vector>

#include "mmwavesim/montecarlo.hpp"

namespace mmwavesim
{

enum class OutputKind
{
    los_prob_curves,
    pathloss_curves,
    eigen_ratios,
    eigen_cdfs,
    se_cdfs
};

OutputKind output_kind_from_string(const std::string &s); // throws ConfigError on unknown name
std::string to_string(OutputKind k);
std::set<OutputKind> all_output_kinds();

struct RunManifest
{
    std::string config_path; // empty when defaults were used
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::set<OutputKind> outputs = all_output_kinds();
};

// Writes one CSV per selected output plus a JSON run record; returns the paths
// written. All files are UTF-8, LF line endings, '.' decimal separator, and
// byte-identical across reruns with the same seed and worker count.
std::vector<std::string> emit_outputs(const CampaignResult &result, const RunManifest &manifest);

} // namespace mmwavesim

#endif
