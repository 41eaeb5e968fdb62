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

#include "cfmimo/cluster_sched.hpp"

#include <algorithm>
#include <numeric>

namespace cfmimo {

double lsf_threshold(const LsfMatrix &beta) {
    if (beta.beta.n_elem == 0)
        throw std::invalid_argument("empty LSF matrix");
    return arma::accu(beta.beta) / static_cast<double>(beta.beta.n_elem);
}

Schedule schedule_greedy(const arma::cx_mat &g_hat_full, arma::uword n) {
    const arma::uword k_total = g_hat_full.n_cols;
    if (n > k_total)
        throw std::invalid_argument("cannot schedule more UEs than candidates");

    arma::vec power(k_total);
    for (arma::uword k = 0; k < k_total; ++k)
        power(k) = std::pow(arma::norm(g_hat_full.col(k)), 2);

    std::vector<arma::uword> order(k_total);
    std::iota(order.begin(), order.end(), arma::uword(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](arma::uword a, arma::uword b) { return power(a) > power(b); });

    Schedule sched;
    sched.selected.assign(order.begin(), order.begin() + n);
    return sched;
}

ClusterMask cluster(const LsfMatrix &beta, const Schedule &schedule, double threshold,
                    arma::uword ants_per_ap) {
    const arma::uword m_total = beta.beta.n_rows;
    const arma::uword n = schedule.selected.size();
    if (ants_per_ap == 0 || m_total % ants_per_ap != 0)
        throw std::invalid_argument("row count must be a multiple of ants_per_ap");
    const arma::uword n_aps = m_total / ants_per_ap;

    ClusterMask mask;
    mask.active.zeros(m_total, n);
    for (arma::uword col = 0; col < n; ++col) {
        const arma::uword ue = schedule.selected[col];
        arma::uword best_ap = 0;
        double best_beta = -1.0;
        for (arma::uword a = 0; a < n_aps; ++a) {
            const double b = beta.beta(a * ants_per_ap, ue);
            if (b > best_beta) {
                best_beta = b;
                best_ap = a;
            }
        }
        for (arma::uword a = 0; a < n_aps; ++a) {
            const bool serve = (beta.beta(a * ants_per_ap, ue) >= threshold) || (a == best_ap);
            if (serve)
                for (arma::uword i = 0; i < ants_per_ap; ++i)
                    mask.active(a * ants_per_ap + i, col) = 1;
        }
    }
    return mask;
}

arma::cx_mat sparsify(const arma::cx_mat &g_hat, const ClusterMask &mask) {
    if (g_hat.n_rows != mask.active.n_rows || g_hat.n_cols != mask.active.n_cols)
        throw std::invalid_argument("channel/mask shape mismatch");
    arma::cx_mat out(g_hat.n_rows, g_hat.n_cols, arma::fill::zeros);
    for (arma::uword j = 0; j < g_hat.n_cols; ++j)
        for (arma::uword i = 0; i < g_hat.n_rows; ++i)
            if (mask.active(i, j))
                out(i, j) = g_hat(i, j);
    return out;
}

} // namespace cfmimo
