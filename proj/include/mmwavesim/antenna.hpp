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

#ifndef MMWAVESIM_ANTENNA_HPP
#define MMWAVESIM_ANTENNA_HPP

#include <armadillo>

#include "mmwavesim/realization.hpp"

namespace mmwavesim
{

enum class Polarization
{
    cross_pol_45, // pairs of +45 / -45 slanted elements at each position
    single
};

enum class ElementPattern
{
    three_gpp_directional,
    omni
};

// Uniform rectangular array. Axis convention: rows run along z (zenith),
// columns along y (azimuth); boresight is azimuth 0, zenith 90 deg. With
// cross polarization the element vector is laid out as the +45 block followed
// by the -45 block, co-located position by position.
struct ArrayGeometry
{
    int rows = 8;
    int cols = 16;
    double spacing_wavelengths = 0.5;
    Polarization polarization = Polarization::cross_pol_45;
    ElementPattern pattern = ElementPattern::three_gpp_directional;
    double max_gain_db = 10.0;

    int positions() const { return rows * cols; }
    int elements() const { return positions() * (polarization == Polarization::cross_pol_45 ? 2 : 1); }
    void validate() const;
};

// Element power gain. The directional pattern is parabolic in both angles with
// 65 deg half-power width, 30 dB floors per cut and a 30 dB total floor;
// maximum at boresight. Omni is 0 dB everywhere.
double element_gain_db(ElementPattern pattern, double az_deg, double zen_deg, double max_gain_db);

// Unit-norm steering vector for the given direction, length = elements().
// Phase of the element at (row r, col c):
//   2*pi*spacing * (r*cos(zen) + c*sin(zen)*sin(az))
// identical for both polarization blocks (co-located elements).
arma::cx_vec array_response(const ArrayGeometry &geometry, double az_deg, double zen_deg);

// Narrowband channel matrix evaluated at the carrier.
struct ChannelMatrix
{
    arma::cx_mat h; // Nr x Nt
    double carrier_ghz = 28.0;
    double applied_gain_db = 0.0; // -path_loss actually folded into h
};

// H = sum over rays of
//   sqrt(power * g_tx(aod) * g_rx(aoa)) * 10^(-PL/20) * exp(-j*2*pi*fc*tau)
//     * (F_rx^T M F_tx)_{per slant pair} .* (e_rx e_tx^H)
// with per-element geometric phases e (unnormalized, |e_i| = 1), slant field
// decomposition F = [cos z; sin z], and polarization coupling
// M = [e^{j p_tt}, sqrt(1/xpr) e^{j p_tp}; sqrt(1/xpr) e^{j p_pt}, e^{j p_pp}].
ChannelMatrix assemble_channel(const ChannelRealization &realization, const ArrayGeometry &tx,
                               const ArrayGeometry &rx, double carrier_ghz);

} // namespace mmwavesim

#endif
