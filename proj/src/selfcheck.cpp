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

#include "cfmimo/channel.hpp"
#include "cfmimo/cluster_sched.hpp"
#include "cfmimo/complexity.hpp"
#include "cfmimo/eval.hpp"
#include "cfmimo/harness.hpp"
#include "cfmimo/power_alloc.hpp"
#include "cfmimo/precoding.hpp"

#include <cstdio>
#include <functional>

namespace cfmimo {

namespace {

struct CheckRunner {
    bool verbose;
    int failures = 0;

    void run(const char *name, const std::function<bool()> &fn) {
        bool ok = false;
        std::string note;
        try {
            ok = fn();
        } catch (const std::exception &e) {
            note = std::string(" (") + e.what() + ")";
        }
        if (!ok)
            ++failures;
        if (verbose || !ok)
            std::printf("%s %s%s\n", ok ? "ok  " : "FAIL", name, note.c_str());
    }
};

arma::cx_mat random_cx(arma::uword r, arma::uword c, Rng &rng) { return rng.cgaussian_mat(r, c); }

} // namespace

int selfcheck(std::uint64_t seed, bool verbose) {
    CheckRunner cr{verbose};

    cr.run("channel decomposition identity", [&] {
        Rng rng(derive_seed(seed, 1));
        arma::mat beta(8, 4, arma::fill::value(2.5));
        const ChannelSet cs = draw_channel(beta, 0.15, rng);
        return arma::abs(cs.g_true - (cs.g_hat + cs.g_err)).max() == 0.0;
    });

    cr.run("channel second moments", [&] {
        Rng rng(derive_seed(seed, 2));
        const double alpha = 0.15;
        const arma::uword draws = 20000;
        arma::mat beta(2, 2, arma::fill::value(3.0));
        double acc_hat = 0.0, acc_err = 0.0;
        for (arma::uword i = 0; i < draws; ++i) {
            const ChannelSet cs = draw_channel(beta, alpha, rng);
            acc_hat += std::norm(cs.g_hat(0, 0));
            acc_err += std::norm(cs.g_err(0, 0));
        }
        const double mean_hat = acc_hat / draws;
        const double mean_err = acc_err / draws;
        // |g|^2 is exponential with std equal to its mean; 3 standard errors.
        const double se_hat = (1 - alpha) * 3.0 * 3.0 / std::sqrt((double)draws);
        const double se_err = alpha * 3.0 * 3.0 / std::sqrt((double)draws);
        return std::abs(mean_hat - (1 - alpha) * 3.0) < se_hat &&
               std::abs(mean_err - alpha * 3.0) < se_err;
    });

    cr.run("determinism of block generation", [&] {
        SystemConfig cfg;
        cfg.num_aps = 4;
        cfg.ants_per_ap = 2;
        cfg.num_ues = 12;
        cfg.num_sched = 4;
        Rng r1(derive_seed(seed, 3));
        Rng r2(derive_seed(seed, 3));
        const TrialBlock b1 = make_trial_block(cfg, r1);
        const TrialBlock b2 = make_trial_block(cfg, r2);
        return arma::approx_equal(b1.chan.g_true, b2.chan.g_true, "absdiff", 0.0) &&
               b1.sched.selected == b2.sched.selected;
    });

    cr.run("zero-forcing residual", [&] {
        Rng rng(derive_seed(seed, 4));
        const arma::cx_mat g = random_cx(100, 25, rng);
        const Precoder p = zf(g);
        const double res =
            arma::abs(g.st() * p.raw - arma::eye<arma::cx_mat>(25, 25)).max();
        return res < 1e-8;
    });

    cr.run("real-form equivalence of ridge solutions", [&] {
        Rng rng(derive_seed(seed, 5));
        for (int i = 0; i < 200; ++i) {
            const arma::uword n = 2 + i % 6;
            EffectiveLsMatrix a{random_cx(n, n, rng)};
            const arma::cx_vec x = rng.cgaussian_mat(n, 1);
            const double lambda = 0.05 + 2.0 * rng.uniform();
            const arma::vec d1 = solve_regularized_ls(a, lambda, x);
            const arma::cx_mat lhs = a.a.t() * a.a + a.a.st() * arma::conj(a.a) +
                                     2.0 * lambda * arma::eye<arma::cx_mat>(n, n);
            const arma::cx_vec rhs = a.a.st() * arma::conj(x) + a.a.t() * x;
            const arma::cx_vec d2 = arma::solve(lhs, rhs);
            if (arma::norm(arma::conv_to<arma::cx_vec>::from(d1) - d2, "inf") > 1e-10)
                return false;
        }
        return true;
    });

    cr.run("closed-form solution zeroes the gradient", [&] {
        Rng rng(derive_seed(seed, 6));
        for (int i = 0; i < 100; ++i) {
            const arma::uword n = 5;
            EffectiveLsMatrix a{random_cx(n, n, rng)};
            const arma::cx_vec x = rng.cgaussian_mat(n, 1);
            const double lambda = 0.1;
            const arma::vec d = solve_regularized_ls(a, lambda, x);
            const arma::mat h = arma::real(a.a.st() * arma::conj(a.a));
            const arma::vec b = arma::real(a.a.st() * arma::conj(x));
            const arma::vec grad = 2.0 * (h * d - b) + 2.0 * lambda * d;
            const double scale = arma::norm(2.0 * b); // gradient magnitude at d = 0
            if (arma::norm(grad) > 1e-8 * scale)
                return false;
        }
        return true;
    });

    cr.run("gradient descent converges to the closed form", [&] {
        Rng rng(derive_seed(seed, 7));
        EffectiveLsMatrix a{random_cx(6, 6, rng)};
        const arma::cx_vec x = rng.cgaussian_mat(6, 1);
        const double lambda = 0.5;
        const arma::vec d_star = solve_regularized_ls(a, lambda, x);
        Precoder id;
        id.w = arma::eye<arma::cx_mat>(6, 6);
        id.raw = id.w;
        const double step = gd_step_size(a, lambda);
        const double huge_cap = 1e12; // keep both projections inactive
        const PowerVector d = gd_solve(a, lambda, x, 20000, step, id, huge_cap);
        return arma::norm(d.d - project_nonneg(d_star)) < 1e-5 ||
               arma::norm(d.d - d_star) < 1e-5;
    });

    cr.run("error covariance matches Monte Carlo", [&] {
        Rng rng(derive_seed(seed, 8));
        const arma::uword m = 10, n = 3;
        const double rho_f = 2.0, alpha = 0.15, sigma_w2 = 1.0;
        arma::mat beta = arma::square(rng.gaussian_mat(m, n)) + 0.2;
        const arma::cx_mat p_a = random_cx(m, n, rng);
        const ErrorCovariance closed =
            error_covariance_closed(beta, p_a, rho_f, alpha, sigma_w2);
        arma::cx_mat acc(n, n, arma::fill::zeros);
        const arma::uword draws = 20000;
        for (arma::uword i = 0; i < draws; ++i) {
            const ChannelSet cs = draw_channel(beta, alpha, rng);
            const arma::cx_mat t = cs.g_err.st() * p_a;
            acc += rho_f * (t * t.t());
        }
        acc /= static_cast<double>(draws);
        acc += sigma_w2 * arma::eye<arma::cx_mat>(n, n);
        for (arma::uword k = 0; k < n; ++k) {
            const double rel =
                std::abs(acc(k, k).real() - closed.r(k, k).real()) / closed.r(k, k).real();
            if (rel > 0.05)
                return false;
        }
        return true;
    });

    cr.run("pipeline feasibility", [&] {
        Rng rng(derive_seed(seed, 9));
        for (int i = 0; i < 200; ++i) {
            const arma::uword m = 12, n = 4;
            const arma::cx_mat g = random_cx(m, n, rng);
            const Precoder w = zf(g);
            const arma::cx_vec x = rng.cgaussian_mat(n, 1);
            SystemConfig cfg;
            cfg.rho_f = 1.0;
            cfg.kappa2 = 0.1 + rng.uniform();
            cfg.p_max = 0.1 + 2.0 * rng.uniform();
            cfg.num_sched = n;
            const PowerVector d = rlspa(g, w, x, cfg);
            if (d.d.min() < 0.0)
                return false;
            const double power = std::pow(arma::norm(compose(w, d), "fro"), 2);
            if (power > cfg.p_max + 1e-9)
                return false;
        }
        return true;
    });

    cr.run("NNLS KKT residual", [&] {
        Rng rng(derive_seed(seed, 10));
        for (int i = 0; i < 50; ++i) {
            const arma::uword n = 6;
            EffectiveLsMatrix a{random_cx(n, n, rng)};
            const arma::cx_vec x = rng.cgaussian_mat(n, 1);
            const double lambda = 0.2;
            const PowerVector d = nnls_solve(a, lambda, x);
            arma::mat at(2 * n + n, n, arma::fill::zeros);
            at.rows(0, n - 1) = arma::real(a.a);
            at.rows(n, 2 * n - 1) = arma::imag(a.a);
            at.rows(2 * n, 3 * n - 1) = std::sqrt(lambda) * arma::eye(n, n);
            arma::vec bt(3 * n, arma::fill::zeros);
            bt.subvec(0, n - 1) = arma::real(x);
            bt.subvec(n, 2 * n - 1) = arma::imag(x);
            const arma::vec grad = 2.0 * at.t() * (at * d.d - bt);
            for (arma::uword k = 0; k < n; ++k) {
                if (d.d(k) > 0.0 && std::abs(grad(k)) > 1e-8)
                    return false;
                if (d.d(k) == 0.0 && grad(k) < -1e-8)
                    return false;
            }
        }
        return true;
    });

    cr.run("FLOP models at the reference operating point", [&] {
        return flops_rlspa(100, 25, 175) == 13671875.0 &&
               flops_rgdpa(100, 25, 30) == 7500000.0 && flops_gdpa(100, 25, 30) == 5625000.0;
    });

    return cr.failures;
}

} // namespace cfmimo
