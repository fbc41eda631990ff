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

#ifndef MMWAVESIM_BEAMFORM_HPP
#define MMWAVESIM_BEAMFORM_HPP

#include <vector>

#include "mmwavesim/antenna.hpp"
#include "mmwavesim/linalg.hpp"

namespace mmwavesim
{

// Signals a drop whose effective channel is too ill-conditioned for ZF; the
// campaign resamples such drops and counts them.
class DegenerateDrop : public std::runtime_error
{
  public:
    explicit DegenerateDrop(const std::string &what) : std::runtime_error(what) {}
};

// Eigenvalues of H*H^H (descending) and their linear-scale ratios to the sum.
struct EigenReport
{
    arma::vec eigenvalues;
    arma::vec ratios; // eigenvalues / sum(eigenvalues), sums to 1
};

EigenReport eigen_report(const ChannelMatrix &h);

// One-stream-per-user precoder/combiner set. tx columns are unit norm, so the
// transmit power constraint is sum(power) = total power.
struct PrecoderSet
{
    arma::cx_mat rf_tx;        // Nt x K analog beams (unit columns; hybrid only)
    arma::cx_mat rf_rx;        // Nr x K analog combiners (unit columns)
    arma::cx_mat baseband;     // K x K digital stage (identity for BD)
    arma::cx_mat tx_effective; // Nt x K composed transmit columns, unit norm
    arma::vec power;           // per-user linear transmit power
};

// Two-stage hybrid precoding: per-user beam pair selected from the array
// response vectors of the user's own rays (max |w^H H f|), then zero-forcing
// baseband B = Hbar^H (Hbar Hbar^H)^-1 on the K x K effective channel.
// Throws DegenerateDrop when cond(Hbar Hbar^H) exceeds cond_limit.
PrecoderSet hybrid_precode(const std::vector<ChannelMatrix> &channels,
                           const std::vector<ChannelRealization> &realizations,
                           const ArrayGeometry &tx, const ArrayGeometry &rx, double total_power,
                           double cond_limit = 1e12);

// Digital block diagonalization: each user transmits in the null space of the
// other users' stacked channels (SVD-derived row-space basis), along the
// dominant singular direction of the projected channel. Equal power split.
PrecoderSet bd_precode(const std::vector<ChannelMatrix> &channels, double total_power);

// SE_k = log2(1 + p_k |w_k^H H_k f_k|^2 / (noise + sum_{j != k} p_j |w_k^H H_k f_j|^2))
std::vector<double> spectral_efficiency(const PrecoderSet &precoders,
                                        const std::vector<ChannelMatrix> &channels,
                                        double noise_power);

// I.i.d. zero-mean unit-variance complex Gaussian channel with the same
// link-budget scaling as the model channels.
ChannelMatrix rayleigh_baseline(RngStream &rng, int n_rx, int n_tx, double path_loss_db,
                                double carrier_ghz);

} // namespace mmwavesim

#endif
