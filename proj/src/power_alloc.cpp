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

#include "cfmimo/power_alloc.hpp"

#include <cmath>

namespace cfmimo {

arma::cx_vec draw_symbols(arma::uword n, constellation_t constellation, Rng &rng) {
    arma::cx_vec x(n);
    if (constellation == constellation_t::gaussian) {
        for (arma::uword k = 0; k < n; ++k)
            x(k) = rng.cgaussian();
    } else {
        const double s = 0.70710678118654752440;
        for (arma::uword k = 0; k < n; ++k) {
            const double re = rng.uniform() < 0.5 ? -s : s;
            const double im = rng.uniform() < 0.5 ? -s : s;
            x(k) = {re, im};
        }
    }
    return x;
}

EffectiveLsMatrix build_effective_matrix(const arma::cx_mat &g_hat, const Precoder &w,
                                         const arma::cx_vec &x, double rho_f) {
    if (g_hat.n_rows != w.w.n_rows || g_hat.n_cols != w.w.n_cols)
        throw std::invalid_argument("channel/precoder shape mismatch");
    if (x.n_elem != g_hat.n_cols)
        throw std::invalid_argument("symbol vector length mismatch");
    EffectiveLsMatrix out;
    out.a = std::sqrt(rho_f) * (g_hat.st() * w.w) * arma::diagmat(x);
    return out;
}

double regularization_param(const Precoder &w, const arma::cx_vec &x, double rho_f,
                            double kappa2) {
    if (kappa2 < 0.0)
        throw std::invalid_argument("kappa2 cannot be negative");
    const arma::cx_mat wx = w.w * arma::diagmat(x);
    const double fro2 = std::pow(arma::norm(wx, "fro"), 2);
    return rho_f * kappa2 * fro2;
}

arma::vec solve_regularized_ls(const EffectiveLsMatrix &a, double lambda,
                               const arma::cx_vec &x) {
    if (lambda < 0.0)
        throw std::invalid_argument("lambda cannot be negative");
    const arma::uword n = a.a.n_cols;
    const arma::mat gram_re = arma::real(a.a.st() * arma::conj(a.a));
    const arma::vec rhs = arma::real(a.a.st() * arma::conj(x));
    const arma::mat lhs = gram_re + lambda * arma::eye(n, n);
    arma::vec d;
    const bool ok = arma::solve(d, lhs, rhs, arma::solve_opts::no_approx);
    if (!ok)
        throw singular_system("regularized LS system is singular (lambda = " +
                              std::to_string(lambda) + ")");
    return d;
}

arma::vec project_total_power(const arma::vec &d, const Precoder &w, double p_max,
                              bool tight) {
    if (!d.is_finite())
        throw std::invalid_argument("power vector must be finite");
    const arma::cx_mat wd = w.w * arma::diagmat(arma::conv_to<arma::cx_vec>::from(d));
    const double fro2 = std::pow(arma::norm(wd, "fro"), 2);
    if (fro2 <= p_max)
        return d;
    if (tight)
        return d * std::sqrt(p_max / fro2);
    return d * (p_max / fro2);
}

arma::vec project_nonneg(const arma::vec &d) {
    return arma::clamp(d, 0.0, arma::datum::inf);
}

PowerVector rlspa(const arma::cx_mat &g_hat, const Precoder &w, const arma::cx_vec &x,
                  const SystemConfig &config) {
    const EffectiveLsMatrix a = build_effective_matrix(g_hat, w, x, config.rho_f);
    const double lambda =
        config.lambda_scale * regularization_param(w, x, config.rho_f, config.kappa2);
    arma::vec d = solve_regularized_ls(a, lambda, x);
    d = project_total_power(d, w, config.p_max, config.tight_power_projection);
    d = project_nonneg(d);
    PowerVector out;
    out.d = std::move(d);
    out.feasible = true;
    return out;
}

PowerVector epa(arma::uword n, double p_max) {
    if (n == 0)
        throw std::invalid_argument("n must be positive");
    PowerVector out;
    out.d = arma::vec(n, arma::fill::value(std::sqrt(p_max / static_cast<double>(n))));
    out.feasible = true;
    return out;
}

double gd_step_size(const EffectiveLsMatrix &a, double lambda) {
    const arma::mat h = arma::real(a.a.st() * arma::conj(a.a));
    const arma::uword n = h.n_rows;
    // Power iteration; H is symmetric PSD so this converges to the largest
    // eigenvalue from almost any start.
    arma::vec v(n, arma::fill::ones);
    v /= arma::norm(v);
    double lam_max = 0.0;
    for (int it = 0; it < 100; ++it) {
        arma::vec hv = h * v;
        const double nrm = arma::norm(hv);
        if (nrm == 0.0)
            break;
        v = hv / nrm;
        lam_max = nrm;
    }
    return 1.0 / (2.0 * (lam_max + lambda) + 1e-300);
}

PowerVector gd_solve(const EffectiveLsMatrix &a, double lambda, const arma::cx_vec &x,
                     arma::uword iters, double step, const Precoder &w, double p_max) {
    if (!(step > 0.0))
        throw std::invalid_argument("step must be positive");
    if (iters == 0)
        throw std::invalid_argument("iters must be positive");
    const arma::uword n = a.a.n_cols;
    const arma::mat h = arma::real(a.a.st() * arma::conj(a.a));
    const arma::vec b = arma::real(a.a.st() * arma::conj(x));

    const auto cost = [&](const arma::vec &d) {
        return std::pow(arma::norm(x - a.a * arma::conv_to<arma::cx_vec>::from(d)), 2) +
               lambda * arma::dot(d, d);
    };

    arma::vec d(n, arma::fill::value(std::sqrt(p_max / static_cast<double>(n))));
    double prev_cost = cost(d);
    int rising = 0;
    for (arma::uword it = 0; it < iters; ++it) {
        const arma::vec grad = 2.0 * (h * d - b) + 2.0 * lambda * d;
        d -= step * grad;
        const double c = cost(d);
        if (!std::isfinite(c) || c > prev_cost) {
            if (++rising >= 5)
                throw divergence("gradient descent cost increased for 5 consecutive "
                                 "iterations; step too large");
        } else {
            rising = 0;
        }
        prev_cost = c;
    }

    d = project_total_power(d, w, p_max);
    d = project_nonneg(d);
    PowerVector out;
    out.d = std::move(d);
    out.feasible = true;
    return out;
}

PowerVector nnls_solve(const EffectiveLsMatrix &a, double lambda, const arma::cx_vec &x) {
    if (lambda < 0.0)
        throw std::invalid_argument("lambda cannot be negative");
    const arma::uword n = a.a.n_cols;
    const arma::uword m = a.a.n_rows;

    // Real lifting: stacking Re/Im parts preserves ||x - a d|| for real d,
    // and sqrt(lambda) I absorbs the ridge term.
    arma::mat at(2 * m + n, n, arma::fill::zeros);
    at.rows(0, m - 1) = arma::real(a.a);
    at.rows(m, 2 * m - 1) = arma::imag(a.a);
    if (lambda > 0.0)
        at.rows(2 * m, 2 * m + n - 1) = std::sqrt(lambda) * arma::eye(n, n);
    arma::vec bt(2 * m + n, arma::fill::zeros);
    bt.subvec(0, m - 1) = arma::real(x);
    bt.subvec(m, 2 * m - 1) = arma::imag(x);

    // Lawson-Hanson active set.
    arma::vec d(n, arma::fill::zeros);
    std::vector<bool> passive(n, false);
    const double tol = 1e-12 * std::max(1.0, arma::norm(at.t() * bt, "inf"));
    const arma::uword max_outer = 10 * n;

    for (arma::uword outer = 0;; ++outer) {
        if (outer >= max_outer)
            throw non_convergence("NNLS active set did not converge");

        const arma::vec grad_neg = at.t() * (bt - at * d); // -0.5 * gradient
        arma::sword enter = -1;
        double best = tol;
        for (arma::uword i = 0; i < n; ++i) {
            if (!passive[i] && grad_neg(i) > best) {
                best = grad_neg(i);
                enter = static_cast<arma::sword>(i);
            }
        }
        if (enter < 0)
            break; // KKT point
        passive[static_cast<arma::uword>(enter)] = true;

        // Inner loop: keep the passive-set LS solution feasible.
        for (;;) {
            std::vector<arma::uword> pidx;
            for (arma::uword i = 0; i < n; ++i)
                if (passive[i])
                    pidx.push_back(i);
            arma::uvec p(pidx);
            arma::vec z_p;
            const bool ok = arma::solve(z_p, at.cols(p), bt);
            if (!ok)
                throw non_convergence("NNLS passive-set solve failed");

            if (z_p.min() > 0.0) {
                d.zeros();
                d(p) = z_p;
                break;
            }

            double alpha_step = arma::datum::inf;
            for (arma::uword j = 0; j < p.n_elem; ++j) {
                if (z_p(j) <= 0.0) {
                    const double denom = d(p(j)) - z_p(j);
                    if (denom > 0.0)
                        alpha_step = std::min(alpha_step, d(p(j)) / denom);
                }
            }
            if (!std::isfinite(alpha_step))
                alpha_step = 0.0;
            arma::vec full_z(n, arma::fill::zeros);
            full_z(p) = z_p;
            d += alpha_step * (full_z - d);
            for (arma::uword i = 0; i < n; ++i) {
                if (passive[i] && d(i) <= tol) {
                    passive[i] = false;
                    d(i) = 0.0;
                }
            }
        }
    }

    PowerVector out;
    out.d = std::move(d);
    out.feasible = true;
    return out;
}

} // namespace cfmimo
