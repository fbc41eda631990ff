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

#include "mmwavesim/linalg.hpp"

#include <stdexcept>

namespace mmwavesim
{

arma::vec hermitian_eigvals(const arma::cx_mat &m, double rel_tol)
{
    if (m.n_rows != m.n_cols)
        throw std::invalid_argument("hermitian_eigvals: matrix must be square");
    if (!m.is_finite())
        throw std::invalid_argument("hermitian_eigvals: matrix has non-finite entries");

    double scale = arma::norm(m, "fro");
    if (scale > 0.0)
    {
        double dev = arma::norm(m - m.t(), "fro");
        if (dev > rel_tol * scale)
            throw std::invalid_argument("hermitian_eigvals: matrix is not Hermitian within tolerance");
    }

    arma::vec ev;
    if (!arma::eig_sym(ev, m))
        throw std::runtime_error("hermitian_eigvals: eigendecomposition failed");
    return arma::reverse(ev);
}

SvdFactors svd_factor(const arma::cx_mat &m)
{
    if (!m.is_finite())
        throw std::invalid_argument("svd_factor: matrix has non-finite entries");

    SvdFactors f;
    if (!arma::svd_econ(f.u, f.s, f.v, m))
        throw std::runtime_error("svd_factor: decomposition failed");
    return f;
}

} // namespace mmwavesim
