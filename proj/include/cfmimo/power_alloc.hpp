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

#ifndef CFMIMO_POWER_ALLOC_HPP
#define CFMIMO_POWER_ALLOC_HPP

#include "cfmimo/rng.hpp"
#include "cfmimo/types.hpp"

namespace cfmimo {

// Unit-average-power symbol vector: CN(0,1) entries, or QPSK corners for
// deterministic tests.
arma::cx_vec draw_symbols(arma::uword n, constellation_t constellation, Rng &rng);

// Effective LS matrix of the per-symbol allocation problem:
//   a = sqrt(rho_f) * transpose(g_hat) * w * diag(x)
// so that a * d equals the precoded receive term for any real d.
EffectiveLsMatrix build_effective_matrix(const arma::cx_mat &g_hat, const Precoder &w,
                                         const arma::cx_vec &x, double rho_f);

// Analytic regularization parameter lambda = rho_f * kappa2 * ||w*diag(x)||_F^2.
double regularization_param(const Precoder &w, const arma::cx_vec &x, double rho_f,
                            double kappa2);

// Closed-form real-valued ridge solution
//   d = (Re{a^T a^*} + lambda I)^{-1} Re{a^T x^*}.
// Throws singular_system when lambda = 0 and the real Gram matrix is singular.
arma::vec solve_regularized_ls(const EffectiveLsMatrix &a, double lambda,
                               const arma::cx_vec &x);

// Total power projection. Default rule rescales a violating d by
// p_max / ||w*diag(d)||_F^2; the tight variant scales to the exact boundary.
arma::vec project_total_power(const arma::vec &d, const Precoder &w, double p_max,
                              bool tight = false);

// Entrywise projection onto the non-negative orthant.
arma::vec project_nonneg(const arma::vec &d);

// Full closed-form pipeline: effective matrix -> lambda -> ridge solve ->
// power projection -> non-negativity. Uses config.rho_f, config.kappa2
// (which must be resolved, i.e. > 0, unless a plain LS run is intended),
// config.lambda_scale, config.p_max and config.tight_power_projection.
PowerVector rlspa(const arma::cx_mat &g_hat, const Precoder &w, const arma::cx_vec &x,
                  const SystemConfig &config);

// Equal power allocation d_k = sqrt(p_max / n).
PowerVector epa(arma::uword n, double p_max);

// Fixed step 1/(2*(lambda_max_estimate + lambda)) for gradient descent on the
// ridge cost; lambda_max estimated by power iteration on Re{a^T a^*}.
double gd_step_size(const EffectiveLsMatrix &a, double lambda);

// Projected gradient descent on J(d) = ||x - a d||^2 + lambda ||d||^2 over
// real d, starting from the equal-power point, followed by the same two
// projections as the closed-form pipeline. lambda > 0 gives the robust
// baseline, lambda = 0 the non-robust one. Throws divergence if the cost
// increases for 5 consecutive iterations.
PowerVector gd_solve(const EffectiveLsMatrix &a, double lambda, const arma::cx_vec &x,
                     arma::uword iters, double step, const Precoder &w, double p_max);

// Non-negative least squares on the real-lifted ridge system
//   min_{d >= 0} || [Re a; Im a; sqrt(lambda) I] d - [Re x; Im x; 0] ||^2
// via the Lawson-Hanson active set; returns a KKT point. Used to validate
// the project-after-solve pipeline. Throws non_convergence after 10*n
// outer iterations.
PowerVector nnls_solve(const EffectiveLsMatrix &a, double lambda, const arma::cx_vec &x);

} // namespace cfmimo

#endif
