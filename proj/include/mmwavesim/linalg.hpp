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

#ifndef MMWAVESIM_LINALG_HPP
#define MMWAVESIM_LINALG_HPP

#include <armadillo>

namespace mmwavesim
{

// Eigenvalues of a Hermitian matrix, sorted descending. The input must be
// Hermitian to within rel_tol of its norm, otherwise std::invalid_argument.
arma::vec hermitian_eigvals(const arma::cx_mat &m, double rel_tol = 1e-10);

// Thin SVD factors, singular values descending: m = u * diagmat(s) * v.t()
struct SvdFactors
{
    arma::cx_mat u; // m x k, orthonormal columns
    arma::vec s;    // k, descending, k = min(rows, cols)
    arma::cx_mat v; // n x k, orthonormal columns
};

// Throws std::invalid_argument on non-finite input.
SvdFactors svd_factor(const arma::cx_mat &m);

} // namespace mmwavesim

#endif
