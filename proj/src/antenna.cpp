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

#include "mmwavesim/antenna.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace mmwavesim
{

namespace
{
constexpr double kDeg2Rad = std::numbers::pi / 180.0;

// Geometric element phases for one polarization block, |e_i| = 1.
void steering_block(const ArrayGeometry &g, double az_deg, double zen_deg, arma::cx_vec &out)
{
    double az = az_deg * kDeg2Rad;
    double zen = zen_deg * kDeg2Rad;
    double kz = 2.0 * std::numbers::pi * g.spacing_wavelengths * std::cos(zen);
    double ky = 2.0 * std::numbers::pi * g.spacing_wavelengths * std::sin(zen) * std::sin(az);

    out.set_size(g.positions());
    int i = 0;
    for (int r = 0; r < g.rows; r++)
        for (int c = 0; c < g.cols; c++, i++)
            out(i) = std::polar(1.0, r * kz + c * ky);
}

// Slant field decomposition [cos z; sin z]; +45/-45 for cross-pol, vertical
// for single-pol elements.
struct SlantField
{
    double f_theta;
    double f_phi;
};

SlantField slant_field(Polarization pol, int block)
{
    if (pol == Polarization::single)
        return {1.0, 0.0};
    const double s = std::numbers::sqrt2 / 2.0;
    return block == 0 ? SlantField{s, s} : SlantField{s, -s};
}
} // namespace

void ArrayGeometry::validate() const
{
    if (rows < 1 || cols < 1)
        throw ConfigError("array geometry: rows and cols must be >= 1");
    if (!(spacing_wavelengths > 0.0))
        throw ConfigError("array geometry: element spacing must be positive");
}

double element_gain_db(ElementPattern pattern, double az_deg, double zen_deg, double max_gain_db)
{
    if (pattern == ElementPattern::omni)
        return 0.0;
    double a_az = std::min(12.0 * std::pow(az_deg / 65.0, 2.0), 30.0);
    double a_zen = std::min(12.0 * std::pow((zen_deg - 90.0) / 65.0, 2.0), 30.0);
    return max_gain_db - std::min(a_az + a_zen, 30.0);
}

arma::cx_vec array_response(const ArrayGeometry &geometry, double az_deg, double zen_deg)
{
    geometry.validate();
    arma::cx_vec block;
    steering_block(geometry, az_deg, zen_deg, block);

    arma::cx_vec v(geometry.elements());
    v.head(geometry.positions()) = block;
    if (geometry.polarization == Polarization::cross_pol_45)
        v.tail(geometry.positions()) = block;
    return v / arma::norm(v);
}

ChannelMatrix assemble_channel(const ChannelRealization &realization, const ArrayGeometry &tx,
                               const ArrayGeometry &rx, double carrier_ghz)
{
    tx.validate();
    rx.validate();
    if (realization.rays.empty())
        throw std::invalid_argument("assemble_channel: realization has no rays");

    const int n_rx = rx.elements();
    const int n_tx = tx.elements();
    const int rx_blocks = rx.polarization == Polarization::cross_pol_45 ? 2 : 1;
    const int tx_blocks = tx.polarization == Polarization::cross_pol_45 ? 2 : 1;
    const int rx_pos = rx.positions();
    const int tx_pos = tx.positions();

    ChannelMatrix out;
    out.carrier_ghz = carrier_ghz;
    out.applied_gain_db = -realization.path_loss_db;
    out.h.zeros(n_rx, n_tx);

    const double pl_amp = std::pow(10.0, -realization.path_loss_db / 20.0);
    const double fc_hz = carrier_ghz * 1e9;

    arma::cx_vec e_rx, e_tx;
    for (const Ray &ray : realization.rays)
    {
        double g_tx = std::pow(10.0, element_gain_db(tx.pattern, ray.aod_az_deg, ray.aod_zen_deg,
                                                     tx.max_gain_db) /
                                         10.0);
        double g_rx = std::pow(10.0, element_gain_db(rx.pattern, ray.aoa_az_deg, ray.aoa_zen_deg,
                                                     rx.max_gain_db) /
                                         10.0);
        std::complex<double> amp =
            std::sqrt(ray.power * g_tx * g_rx) * pl_amp *
            std::polar(1.0, -2.0 * std::numbers::pi * fc_hz * ray.delay_s);

        steering_block(rx, ray.aoa_az_deg, ray.aoa_zen_deg, e_rx);
        steering_block(tx, ray.aod_az_deg, ray.aod_zen_deg, e_tx);

        double cross = std::sqrt(1.0 / ray.xpr);
        std::complex<double> m_tt = std::polar(1.0, ray.phase_tt);
        std::complex<double> m_tp = cross * std::polar(1.0, ray.phase_tp);
        std::complex<double> m_pt = cross * std::polar(1.0, ray.phase_pt);
        std::complex<double> m_pp = std::polar(1.0, ray.phase_pp);

        for (int br = 0; br < rx_blocks; br++)
        {
            SlantField frx = slant_field(rx.polarization, br);
            for (int bt = 0; bt < tx_blocks; bt++)
            {
                SlantField ftx = slant_field(tx.polarization, bt);
                // F_rx^T * M * F_tx for this slant pair
                std::complex<double> coupling = frx.f_theta * (m_tt * ftx.f_theta + m_tp * ftx.f_phi) +
                                                frx.f_phi * (m_pt * ftx.f_theta + m_pp * ftx.f_phi);
                std::complex<double> c = amp * coupling;
                auto view = out.h.submat(br * rx_pos, bt * tx_pos, (br + 1) * rx_pos - 1,
                                         (bt + 1) * tx_pos - 1);
                view += c * e_rx * e_tx.t();
            }
        }
    }
    return out;
}

} // namespace mmwavesim
