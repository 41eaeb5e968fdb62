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

#include "cfmimo/complexity.hpp"

namespace cfmimo {

namespace {
void check_positive(arma::uword m_total, arma::uword n, arma::uword reps) {
    if (m_total == 0 || n == 0 || reps == 0)
        throw std::invalid_argument("FLOP model parameters must be positive");
}
} // namespace

double flops_rlspa(arma::uword m_total, arma::uword n, arma::uword n_sym, bool detailed) {
    check_positive(m_total, n, n_sym);
    const double m = static_cast<double>(m_total);
    const double nn = static_cast<double>(n);
    double per_symbol = nn * nn * nn + m * nn * nn;
    if (detailed)
        per_symbol += m * nn * nn // effective-matrix build
                      + m * nn    // regularization parameter
                      + m * nn + nn; // projections
    return static_cast<double>(n_sym) * per_symbol;
}

double flops_rgdpa(arma::uword m_total, arma::uword n, arma::uword iters) {
    check_positive(m_total, n, iters);
    return 4.0 * static_cast<double>(iters) * static_cast<double>(m_total) *
           static_cast<double>(n) * static_cast<double>(n);
}

double flops_gdpa(arma::uword m_total, arma::uword n, arma::uword iters) {
    check_positive(m_total, n, iters);
    return 3.0 * static_cast<double>(iters) * static_cast<double>(m_total) *
           static_cast<double>(n) * static_cast<double>(n);
}

} // namespace cfmimo
