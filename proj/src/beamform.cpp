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

#include "mmwavesim/beamform.hpp"

#include <cmath>
#include <stdexcept>

namespace mmwavesim
{

EigenReport eigen_report(const ChannelMatrix &h)
{
    EigenReport rep;
    arma::cx_mat gram = h.h * h.h.t();
    gram = 0.5 * (gram + gram.t()); // symmetrize roundoff
    rep.eigenvalues = hermitian_eigvals(gram);
    double sum = arma::accu(rep.eigenvalues);
    rep.ratios = sum > 0.0 ? arma::vec(rep.eigenvalues / sum)
                           : arma::vec(rep.eigenvalues.n_elem, arma::fill::zeros);
    return rep;
}

PrecoderSet hybrid_precode(const std::vector<ChannelMatrix> &channels,
                           const std::vector<ChannelRealization> &realizations,
                           const ArrayGeometry &tx, const ArrayGeometry &rx, double total_power,
                           double cond_limit)
{
    const int k_users = static_cast<int>(channels.size());
    if (k_users < 1 || realizations.size() != channels.size())
        throw std::invalid_argument("hybrid_precode: need matching channels and realizations");

    const int n_tx = tx.elements();
    const int n_rx = rx.elements();

    PrecoderSet set;
    set.rf_tx.set_size(n_tx, k_users);
    set.rf_rx.set_size(n_rx, k_users);

    // Stage 1: per user, pick the (tx ray, rx ray) response pair maximizing
    // |w^H H f| over the user's own ray directions.
    for (int k = 0; k < k_users; k++)
    {
        const auto &rays = realizations[k].rays;
        if (rays.empty())
            throw std::invalid_argument("hybrid_precode: user realization has no rays");

        arma::cx_mat cand_f(n_tx, rays.size());
        arma::cx_mat cand_w(n_rx, rays.size());
        for (std::size_t i = 0; i < rays.size(); i++)
        {
            cand_f.col(i) = array_response(tx, rays[i].aod_az_deg, rays[i].aod_zen_deg);
            cand_w.col(i) = array_response(rx, rays[i].aoa_az_deg, rays[i].aoa_zen_deg);
        }
        arma::cx_mat hf = channels[k].h * cand_f; // Nr x F
        arma::mat metric = arma::abs(cand_w.t() * hf);
        arma::uword best_w, best_f;
        metric.max(best_w, best_f);
        set.rf_tx.col(k) = cand_f.col(best_f);
        set.rf_rx.col(k) = cand_w.col(best_w);
    }

    // Stage 2: zero-forcing on the K x K effective channel,
    // B = Hbar^H (Hbar Hbar^H)^-1, evaluated through the SVD with one Newton
    // refinement step so the nulls hold to 1e-9 even near the condition limit.
    arma::cx_mat h_eff(k_users, k_users);
    for (int k = 0; k < k_users; k++)
        h_eff.row(k) = set.rf_rx.col(k).t() * channels[k].h * set.rf_tx;

    SvdFactors sv = svd_factor(h_eff);
    double s_min = sv.s(sv.s.n_elem - 1);
    double cond_gram = s_min > 0.0 ? std::pow(sv.s(0) / s_min, 2.0)
                                   : std::numeric_limits<double>::infinity();
    if (!std::isfinite(cond_gram) || cond_gram > cond_limit)
        throw DegenerateDrop("effective channel Gram condition number " + std::to_string(cond_gram));

    arma::cx_mat b = sv.v * arma::diagmat(1.0 / sv.s) * sv.u.t();
    arma::cx_mat residual = arma::eye<arma::cx_mat>(k_users, k_users) - h_eff * b;
    set.baseband = b + b * residual;

    set.tx_effective.set_size(n_tx, k_users);
    for (int k = 0; k < k_users; k++)
    {
        arma::cx_vec col = set.rf_tx * set.baseband.col(k);
        set.tx_effective.col(k) = col / arma::norm(col);
    }
    set.power = arma::vec(k_users, arma::fill::value(total_power / k_users));
    return set;
}

PrecoderSet bd_precode(const std::vector<ChannelMatrix> &channels, double total_power)
{
    const int k_users = static_cast<int>(channels.size());
    if (k_users < 1)
        throw std::invalid_argument("bd_precode: need at least one user");

    const int n_tx = static_cast<int>(channels[0].h.n_cols);
    int nr_sum = 0;
    for (const auto &c : channels)
        nr_sum += static_cast<int>(c.h.n_rows);

    PrecoderSet set;
    set.tx_effective.set_size(n_tx, k_users);
    set.rf_rx.set_size(channels[0].h.n_rows, k_users);
    set.baseband.eye(k_users, k_users);

    for (int k = 0; k < k_users; k++)
    {
        if (nr_sum - static_cast<int>(channels[k].h.n_rows) >= n_tx)
            throw ConfigError("bd_precode: interference space fills the transmit dimension, "
                              "null space is empty");

        arma::cx_mat stacked(nr_sum - channels[k].h.n_rows, n_tx);
        int row = 0;
        for (int j = 0; j < k_users; j++)
        {
            if (j == k)
                continue;
            stacked.rows(row, row + channels[j].h.n_rows - 1) = channels[j].h;
            row += static_cast<int>(channels[j].h.n_rows);
        }

        // Null-space projector from the SVD row-space basis of the stacked
        // interference matrix, then the dominant singular pair of the
        // projected channel.
        arma::cx_mat h_proj = channels[k].h;
        if (row > 0)
        {
            SvdFactors sv = svd_factor(stacked);
            double tol = sv.s.n_elem > 0 ? sv.s(0) * 1e-12 : 0.0;
            arma::uvec keep = arma::find(sv.s > tol);
            if (!keep.is_empty())
            {
                arma::cx_mat basis = sv.v.cols(keep); // orthonormal row-space basis
                h_proj -= (channels[k].h * basis) * basis.t();
            }
        }

        SvdFactors dom = svd_factor(h_proj);
        set.tx_effective.col(k) = dom.v.col(0);
        set.rf_rx.col(k) = dom.u.col(0);
    }
    set.rf_tx = set.tx_effective;
    set.power = arma::vec(k_users, arma::fill::value(total_power / k_users));
    return set;
}

std::vector<double> spectral_efficiency(const PrecoderSet &precoders,
                                        const std::vector<ChannelMatrix> &channels,
                                        double noise_power)
{
    const int k_users = static_cast<int>(channels.size());
    if (precoders.tx_effective.n_cols != static_cast<arma::uword>(k_users))
        throw std::invalid_argument("spectral_efficiency: precoder/channel count mismatch");
    if (!(noise_power > 0.0))
        throw std::invalid_argument("spectral_efficiency: noise power must be positive");

    std::vector<double> se(k_users);
    for (int k = 0; k < k_users; k++)
    {
        arma::cx_rowvec rx_chain = precoders.rf_rx.col(k).t() * channels[k].h;
        double desired =
            precoders.power(k) * std::norm(arma::as_scalar(rx_chain * precoders.tx_effective.col(k)));
        double interference = 0.0;
        for (int j = 0; j < k_users; j++)
        {
            if (j == k)
                continue;
            interference += precoders.power(j) *
                            std::norm(arma::as_scalar(rx_chain * precoders.tx_effective.col(j)));
        }
        se[k] = std::log2(1.0 + desired / (noise_power + interference));
    }
    return se;
}

ChannelMatrix rayleigh_baseline(RngStream &rng, int n_rx, int n_tx, double path_loss_db,
                                double carrier_ghz)
{
    if (n_rx < 1 || n_tx < 1)
        throw std::invalid_argument("rayleigh_baseline: dimensions must be positive");

    ChannelMatrix out;
    out.carrier_ghz = carrier_ghz;
    out.applied_gain_db = -path_loss_db;
    out.h.set_size(n_rx, n_tx);

    const double amp = std::pow(10.0, -path_loss_db / 20.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (arma::uword j = 0; j < out.h.n_cols; j++)
        for (arma::uword i = 0; i < out.h.n_rows; i++)
            out.h(i, j) = amp * std::complex<double>(rng.normal() * inv_sqrt2, rng.normal() * inv_sqrt2);
    return out;
}

} // namespace mmwavesim
