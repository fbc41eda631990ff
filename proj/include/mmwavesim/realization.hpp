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

#ifndef MMWAVESIM_REALIZATION_HPP
#define MMWAVESIM_REALIZATION_HPP

#include <vector>

#include "mmwavesim/scenario.hpp"

namespace mmwavesim
{

// Wrap an azimuth into [-180, 180).
double wrap_azimuth_deg(double az);

// Fold a zenith angle into [0, 180] by reflection at the poles (preserves
// distribution mass instead of piling it up at 0/180).
double reflect_zenith_deg(double zen);

// One multipath ray of the small-scale profile. Powers are linear fractions of
// the unit-normalized profile; the omnidirectional path loss is carried
// separately on the realization.
struct Ray
{
    double delay_s = 0.0;
    double power = 0.0;
    double aod_az_deg = 0.0;
    double aod_zen_deg = 90.0;
    double aoa_az_deg = 0.0;
    double aoa_zen_deg = 90.0;
    double xpr = 1.0; // linear co-to-cross power ratio
    // Initial phases of the 2x2 polarization coupling matrix [rad]:
    // theta-theta, theta-phi, phi-theta, phi-phi.
    double phase_tt = 0.0;
    double phase_tp = 0.0;
    double phase_pt = 0.0;
    double phase_pp = 0.0;
};

// Model-agnostic multipath realization, the common output of both generators.
// Invariant: sum of ray powers is 1 (small-scale profile normalized before the
// path loss is applied).
struct ChannelRealization
{
    std::vector<Ray> rays;
    LinkState state = LinkState::nlos;
    double path_loss_db = 0.0;
    ChannelModel model = ChannelModel::three_gpp;

    double power_sum() const
    {
        double s = 0.0;
        for (const Ray &r : rays)
            s += r.power;
        return s;
    }
};

} // namespace mmwavesim

#endif
