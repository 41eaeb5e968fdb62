// SPDX-License-Identifier: Apache-2.0
//
// cfmimo - downlink simulation library for user-centric cell-free massive MIMO
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

#include "cfmimo/precoding.hpp"

namespace cfmimo {

Precoder zf(const arma::cx_mat &g_a_hat) {
    const arma::uword m = g_a_hat.n_rows;
    const arma::uword n = g_a_hat.n_cols;
    if (n > m)
        throw std::invalid_argument("ZF requires n <= M");

    // Gram = transpose(G) * conj(G) = conj(G^H G): Hermitian positive definite
    // for full column rank.
    const arma::cx_mat gram = g_a_hat.st() * arma::conj(g_a_hat);
    const double c = arma::cond(gram);
    if (!std::isfinite(c) || c > 1e12)
        throw singular_channel("ZF Gram matrix condition number " + std::to_string(c));

    Precoder p;
    p.raw = arma::conj(g_a_hat) * arma::inv(gram);
    p.w = p.raw;
    for (arma::uword k = 0; k < n; ++k) {
        const double nrm = arma::norm(p.raw.col(k));
        if (!(nrm > 0.0))
            throw singular_channel("ZF produced a zero precoding column");
        p.w.col(k) /= nrm;
    }
    return p;
}

arma::cx_mat compose(const Precoder &w, const PowerVector &d) {
    if (d.d.n_elem != w.w.n_cols)
        throw std::invalid_argument("power vector length must match precoder columns");
    if (d.d.min() < 0.0)
        throw std::invalid_argument("power vector entries must be non-negative");
    return w.w * arma::diagmat(arma::conv_to<arma::cx_vec>::from(d.d));
}

} // namespace cfmimo
