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

#include "cfmimo/eval.hpp"

#include <cmath>

namespace cfmimo {

ErrorCovariance error_covariance_closed(const arma::mat &beta_sched, const arma::cx_mat &p_a,
                                        double rho_f, double alpha, double sigma_w2) {
    if (beta_sched.n_rows != p_a.n_rows || beta_sched.n_cols != p_a.n_cols)
        throw std::invalid_argument("beta/precoder shape mismatch");
    const arma::uword n = p_a.n_cols;

    // Row powers of P_a, i.e. the diagonal of P_a * P_a^H.
    const arma::vec row_power = arma::sum(arma::square(arma::abs(p_a)), 1);

    ErrorCovariance out;
    out.r.zeros(n, n);
    for (arma::uword k = 0; k < n; ++k) {
        const double err = rho_f * alpha * arma::dot(beta_sched.col(k), row_power);
        out.r(k, k) = err + sigma_w2;
    }
    return out;
}

double sum_rate(const arma::cx_mat &g_hat, const arma::cx_mat &p_a, const ErrorCovariance &r,
                double rho_f) {
    const arma::uword n = p_a.n_cols;
    if (r.r.n_rows != n || r.r.n_cols != n)
        throw std::invalid_argument("covariance dimension mismatch");

    arma::cx_mat l;
    if (!arma::chol(l, r.r, "lower"))
        throw numerical_failure("error covariance is not positive definite");

    // det(rho_f T T^H R^{-1} + I) with T = transpose(g_hat) * p_a equals
    // det(rho_f B B^H + I) for B = L^{-1} T, which is Hermitian PD.
    const arma::cx_mat t = g_hat.st() * p_a;
    const arma::cx_mat b = arma::solve(arma::trimatl(l), t);
    arma::cx_mat arg = rho_f * (b * b.t()) + arma::eye<arma::cx_mat>(n, n);
    arg = 0.5 * (arg + arg.t()); // enforce Hermitian symmetry before factorizing

    arma::cx_mat lc;
    if (!arma::chol(lc, arg, "lower"))
        throw numerical_failure("sum-rate determinant argument is not positive definite");

    double log2det = 0.0;
    for (arma::uword k = 0; k < n; ++k)
        log2det += 2.0 * std::log2(lc(k, k).real());
    return log2det;
}

arma::cx_vec received_signal(const arma::cx_mat &g_true, const arma::cx_mat &p_a,
                             const arma::cx_vec &x, double rho_f, double sigma_w2, Rng &rng) {
    if (g_true.n_rows != p_a.n_rows || g_true.n_cols != p_a.n_cols)
        throw std::invalid_argument("channel/precoder shape mismatch");
    if (x.n_elem != p_a.n_cols)
        throw std::invalid_argument("symbol vector length mismatch");
    const arma::uword n = x.n_elem;
    arma::cx_vec noise(n);
    const double s = std::sqrt(sigma_w2);
    for (arma::uword k = 0; k < n; ++k)
        noise(k) = s * rng.cgaussian();
    return std::sqrt(rho_f) * (g_true.st() * (p_a * x)) + noise;
}

double residual_error(const arma::cx_vec &x, const arma::cx_vec &y) {
    if (x.n_elem != y.n_elem)
        throw std::invalid_argument("length mismatch");
    return std::pow(arma::norm(x - y), 2);
}

} // namespace cfmimo
