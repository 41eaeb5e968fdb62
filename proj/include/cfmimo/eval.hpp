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

#ifndef CFMIMO_EVAL_HPP
#define CFMIMO_EVAL_HPP

#include "cfmimo/rng.hpp"
#include "cfmimo/types.hpp"

namespace cfmimo {

// Closed form of E[rho_f * transpose(G_err) * P_a * P_a^H * conj(G_err)]
// + sigma_w2 * I under the independent zero-mean error model: diagonal with
//   r[k,k] = rho_f * alpha * sum_m beta[m,k] * [P_a P_a^H]_{m,m} + sigma_w2.
ErrorCovariance error_covariance_closed(const arma::mat &beta_sched, const arma::cx_mat &p_a,
                                        double rho_f, double alpha, double sigma_w2);

// Sum-rate upper bound under imperfect CSI:
//   SR = log2 det( rho_f * transpose(g_hat) * p_a * p_a^H * conj(g_hat) * r^{-1} + I_n )
// computed in the log domain via Cholesky factorizations.
// Throws numerical_failure if the symmetrized argument is not positive definite.
double sum_rate(const arma::cx_mat &g_hat, const arma::cx_mat &p_a, const ErrorCovariance &r,
                double rho_f);

// Received signal y = sqrt(rho_f) * transpose(g_true) * p_a * x + w with
// i.i.d. CN(0, sigma_w2) noise entries.
arma::cx_vec received_signal(const arma::cx_mat &g_true, const arma::cx_mat &p_a,
                             const arma::cx_vec &x, double rho_f, double sigma_w2, Rng &rng);

// Squared Euclidean distance between transmitted and received vectors.
double residual_error(const arma::cx_vec &x, const arma::cx_vec &y);

} // namespace cfmimo

#endif
