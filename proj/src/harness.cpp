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

#include "cfmimo/harness.hpp"

#include "cfmimo/channel.hpp"
#include "cfmimo/cluster_sched.hpp"
#include "cfmimo/complexity.hpp"
#include "cfmimo/eval.hpp"
#include "cfmimo/power_alloc.hpp"
#include "cfmimo/precoding.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

namespace cfmimo {

std::string method_name(method_t m) {
    switch (m) {
    case method_t::rlspa:
        return "rlspa";
    case method_t::rgdpa_style:
        return "rgdpa_style";
    case method_t::gdpa_style:
        return "gdpa_style";
    case method_t::epa:
        return "epa";
    }
    throw std::invalid_argument("unknown method");
}

method_t method_from_name(const std::string &name) {
    if (name == "rlspa")
        return method_t::rlspa;
    if (name == "rgdpa_style")
        return method_t::rgdpa_style;
    if (name == "gdpa_style")
        return method_t::gdpa_style;
    if (name == "epa")
        return method_t::epa;
    throw std::invalid_argument("unknown method name: " + name);
}

void ExperimentSpec::validate() const {
    base.validate();
    if (trials == 0)
        throw std::invalid_argument("trials must be >= 1");
    if (snr_grid_db.empty())
        throw std::invalid_argument("snr grid cannot be empty");
    if (methods.empty())
        throw std::invalid_argument("method list cannot be empty");
    if (symbols_per_trial == 0)
        throw std::invalid_argument("symbols_per_trial must be >= 1");
    if (threads == 0)
        throw std::invalid_argument("threads must be >= 1");
}

TrialBlock make_trial_block(const SystemConfig &config, Rng &rng) {
    TrialBlock block;
    block.topo = place_nodes(config, rng);
    block.beta = lsf(block.topo, config, rng);

    // Channel draw covers all K candidates; scheduling needs the estimates.
    ChannelSet full = draw_channel(block.beta.beta, config.alpha, rng);

    block.sched = schedule_greedy(full.g_hat, config.num_sched);
    const double thr = lsf_threshold(block.beta);
    block.mask = cluster(block.beta, block.sched, thr, config.ants_per_ap);

    const arma::uword n = config.num_sched;
    const arma::uword m = config.total_ants();
    block.chan.g_true.set_size(m, n);
    block.chan.g_hat.set_size(m, n);
    block.chan.g_err.set_size(m, n);
    block.chan.beta_sched.set_size(m, n);
    for (arma::uword col = 0; col < n; ++col) {
        const arma::uword ue = block.sched.selected[col];
        block.chan.g_true.col(col) = full.g_true.col(ue);
        block.chan.g_hat.col(col) = full.g_hat.col(ue);
        block.chan.g_err.col(col) = full.g_err.col(ue);
        block.chan.beta_sched.col(col) = block.beta.beta.col(ue);
    }

    const arma::cx_mat g_a = sparsify(block.chan.g_hat, block.mask);
    block.precoder = zf(g_a);

    const double err_moment = config.alpha * arma::accu(block.chan.beta_sched);
    block.kappa2_eff = config.kappa2 > 0.0 ? config.kappa2 : config.kappa2_scale * err_moment;
    block.kappa1_eff = config.kappa1 > 0.0 ? config.kappa1 : config.kappa1_scale * err_moment;
    return block;
}

PowerVector allocate(method_t method, const TrialBlock &block, const arma::cx_vec &x,
                     const SystemConfig &config) {
    switch (method) {
    case method_t::epa:
        return epa(config.num_sched, config.p_max);
    case method_t::rlspa:
        return rlspa(block.chan.g_hat, block.precoder, x, config);
    case method_t::rgdpa_style:
    case method_t::gdpa_style: {
        const EffectiveLsMatrix a =
            build_effective_matrix(block.chan.g_hat, block.precoder, x, config.rho_f);
        double lambda = 0.0;
        if (method == method_t::rgdpa_style)
            lambda = config.lambda_scale *
                     regularization_param(block.precoder, x, config.rho_f, config.kappa2);
        const double step = gd_step_size(a, lambda);
        return gd_solve(a, lambda, x, config.gd_iters, step, block.precoder, config.p_max);
    }
    }
    throw std::invalid_argument("unknown method");
}

SumRateSample run_trial(const SystemConfig &config, double snr_db, method_t method, Rng &rng,
                        arma::uword symbols_per_trial) {
    SystemConfig cfg = config;
    cfg.rho_f = std::pow(10.0, snr_db / 10.0) * cfg.sigma_w2;

    TrialBlock block;
    bool have_block = false;
    for (int attempt = 0; attempt < 10 && !have_block; ++attempt) {
        try {
            block = make_trial_block(cfg, rng);
            have_block = true;
        } catch (const singular_channel &) {
            // degenerate draw; redraw from the same trial stream
        }
    }
    if (!have_block)
        throw singular_channel("trial exhausted 10 channel redraws");

    cfg.kappa2 = block.kappa2_eff;
    cfg.kappa1 = block.kappa1_eff;

    double sr_acc = 0.0;
    for (arma::uword s = 0; s < symbols_per_trial; ++s) {
        const arma::cx_vec x = draw_symbols(cfg.num_sched, cfg.constellation, rng);
        const PowerVector d = allocate(method, block, x, cfg);
        const arma::cx_mat p_a = compose(block.precoder, d);
        const ErrorCovariance r = error_covariance_closed(block.chan.beta_sched, p_a,
                                                          cfg.rho_f, cfg.alpha, cfg.sigma_w2);
        sr_acc += sum_rate(block.chan.g_hat, p_a, r, cfg.rho_f);
    }

    SumRateSample sample;
    sample.sr_bits = sr_acc / static_cast<double>(symbols_per_trial);
    sample.snr_db = snr_db;
    sample.method = method_name(method);
    return sample;
}

ResultTable run_experiment(const ExperimentSpec &spec) {
    spec.validate();
    const arma::uword n_methods = spec.methods.size();
    const arma::uword n_snr = spec.snr_grid_db.size();
    const arma::uword n_trials = spec.trials;
    const arma::uword n_items = n_methods * n_snr * n_trials;

    std::vector<double> sr(n_items, arma::datum::nan);
    std::atomic<arma::uword> next{0};
    std::atomic<arma::uword> failed{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const arma::uword item = next.fetch_add(1);
            if (item >= n_items)
                return;
            const arma::uword mi = item / (n_snr * n_trials);
            const arma::uword rest = item % (n_snr * n_trials);
            const arma::uword si = rest / n_trials;
            const arma::uword ti = rest % n_trials;
            try {
                Rng rng(derive_seed(spec.base.seed, ti));
                SumRateSample s = run_trial(spec.base, spec.snr_grid_db[si],
                                            spec.methods[mi], rng, spec.symbols_per_trial);
                sr[item] = s.sr_bits;
            } catch (const singular_channel &) {
                failed.fetch_add(1);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    const arma::uword n_workers = std::min<arma::uword>(spec.threads, n_items);
    std::vector<std::thread> pool;
    for (arma::uword t = 1; t < n_workers; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);

    ResultTable table;
    table.failed_trials = failed.load();
    for (arma::uword mi = 0; mi < n_methods; ++mi) {
        for (arma::uword si = 0; si < n_snr; ++si) {
            double sum = 0.0;
            double sum2 = 0.0;
            arma::uword count = 0;
            for (arma::uword ti = 0; ti < n_trials; ++ti) {
                const double v = sr[mi * n_snr * n_trials + si * n_trials + ti];
                if (std::isnan(v))
                    continue;
                sum += v;
                sum2 += v * v;
                ++count;
            }
            if (count == 0)
                throw numerical_failure("all trials failed for " +
                                        method_name(spec.methods[mi]));
            ResultRow row;
            row.method = method_name(spec.methods[mi]);
            row.snr_db = spec.snr_grid_db[si];
            row.mean_sr = sum / static_cast<double>(count);
            row.std_sr = count > 1 ? std::sqrt(std::max(0.0, (sum2 - sum * sum / count) /
                                                        static_cast<double>(count - 1)))
                                   : 0.0;
            row.trials = count;
            row.seed = spec.base.seed;
            table.rows.push_back(std::move(row));
        }
    }
    if (table.failed_trials > 0)
        std::fprintf(stderr, "warning: %llu trial runs exhausted channel redraws\n",
                     static_cast<unsigned long long>(table.failed_trials));
    return table;
}

ResultTable lambda_sweep(const ExperimentSpec &spec) {
    if (spec.lambda_sweep.empty())
        throw std::invalid_argument("lambda_sweep multiplier list is empty");
    ResultTable out;
    for (const double mult : spec.lambda_sweep) {
        if (mult < 0.0)
            throw std::invalid_argument("lambda multipliers cannot be negative");
        ExperimentSpec s = spec;
        s.base.lambda_scale = mult;
        ResultTable t = run_experiment(s);
        char tag[64];
        std::snprintf(tag, sizeof(tag), "@lx%g", mult);
        for (auto &row : t.rows) {
            row.method += tag;
            out.rows.push_back(std::move(row));
        }
        out.failed_trials += t.failed_trials;
    }
    return out;
}

ResultTable complexity_table(const SystemConfig &config,
                             const std::vector<arma::uword> &ap_counts) {
    ResultTable table;
    for (const arma::uword l : ap_counts) {
        const arma::uword m = l * config.ants_per_ap;
        table.complexity.push_back({"rlspa", m, flops_rlspa(m, config.num_sched, config.n_sym)});
        table.complexity.push_back(
            {"rgdpa_style", m, flops_rgdpa(m, config.num_sched, config.gd_iters)});
        table.complexity.push_back(
            {"gdpa_style", m, flops_gdpa(m, config.num_sched, config.gd_iters)});
    }
    return table;
}

} // namespace cfmimo
