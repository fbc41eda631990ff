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

#include "mmwavesim/realization.hpp"

#include <cmath>

namespace mmwavesim
{

double wrap_azimuth_deg(double az)
{
    double a = std::fmod(az + 180.0, 360.0);
    if (a < 0.0)
        a += 360.0;
    return a - 180.0;
}

double reflect_zenith_deg(double zen)
{
    double z = std::fmod(zen, 360.0);
    if (z < 0.0)
        z += 360.0;
    return z > 180.0 ? 360.0 - z : z;
}

} // namespace mmwavesim
