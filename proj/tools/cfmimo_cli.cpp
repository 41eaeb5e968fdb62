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

#include "cfmimo/config_io.hpp"
#include "cfmimo/harness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    arma::uword trials = 0;
    arma::uword threads = 0;
};

cfmimo::ExperimentSpec resolve_spec(const CommonOpts &opts) {
    cfmimo::ExperimentSpec spec;
    if (!opts.config_path.empty())
        spec = cfmimo::load_experiment_spec(opts.config_path);
    if (opts.seed_set)
        spec.base.seed = opts.seed;
    if (opts.trials > 0)
        spec.trials = opts.trials;
    if (opts.threads > 0)
        spec.threads = opts.threads;
    if (!opts.out_path.empty())
        spec.output_path = opts.out_path;
    return spec;
}

void add_common(CLI::App *cmd, CommonOpts &opts, bool config_required) {
    auto *c = cmd->add_option("--config", opts.config_path, "experiment config file");
    if (config_required)
        c->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed, "master seed override")
        ->each([&opts](const std::string &) { opts.seed_set = true; });
    cmd->add_option("--trials", opts.trials, "trial count override");
    cmd->add_option("--out", opts.out_path, "output CSV path");
    cmd->add_option("--threads", opts.threads, "worker thread count");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Downlink cell-free massive MIMO power allocation simulator"};
    app.require_subcommand(1);

    CommonOpts run_opts, sweep_opts, flops_opts;
    std::uint64_t validate_seed = 1;

    auto *cmd_run = app.add_subcommand("run", "run a sum-rate experiment");
    add_common(cmd_run, run_opts, true);

    auto *cmd_sweep =
        app.add_subcommand("sweep-lambda", "sweep regularization multipliers");
    add_common(cmd_sweep, sweep_opts, true);

    auto *cmd_flops = app.add_subcommand("flops", "emit the FLOP comparison table");
    add_common(cmd_flops, flops_opts, false);
    std::vector<arma::uword> ap_counts = {10, 15, 20, 25, 30, 40, 50};
    cmd_flops->add_option("--aps", ap_counts, "AP counts to sweep");

    auto *cmd_validate = app.add_subcommand("validate", "run the numeric self-checks");
    cmd_validate->add_option("--seed", validate_seed, "seed for the self-checks");

    try {
        app.parse(argc, argv);

        if (cmd_run->parsed()) {
            cfmimo::ExperimentSpec spec = resolve_spec(run_opts);
            const cfmimo::ResultTable table = cfmimo::run_experiment(spec);
            cfmimo::emit(table, spec, spec.output_path);
            std::printf("wrote %s (%zu rows)\n", spec.output_path.c_str(),
                        table.rows.size());
        } else if (cmd_sweep->parsed()) {
            cfmimo::ExperimentSpec spec = resolve_spec(sweep_opts);
            if (spec.lambda_sweep.empty())
                spec.lambda_sweep = {0.0, 0.5, 1.0, 2.0, 5.0};
            const cfmimo::ResultTable table = cfmimo::lambda_sweep(spec);
            cfmimo::emit(table, spec, spec.output_path);
            std::printf("wrote %s (%zu rows)\n", spec.output_path.c_str(),
                        table.rows.size());
        } else if (cmd_flops->parsed()) {
            cfmimo::ExperimentSpec spec = resolve_spec(flops_opts);
            const cfmimo::ResultTable table =
                cfmimo::complexity_table(spec.base, ap_counts);
            cfmimo::emit(table, spec, spec.output_path);
            for (const auto &row : table.complexity)
                std::printf("%-12s M=%4llu  %.0f\n", row.method.c_str(),
                            static_cast<unsigned long long>(row.m_total), row.flops);
        } else if (cmd_validate->parsed()) {
            const int failures = cfmimo::selfcheck(validate_seed);
            if (failures > 0) {
                std::fprintf(stderr, "{\"error\":\"%d self-checks failed\"}\n", failures);
                return 2;
            }
            std::printf("all self-checks passed\n");
        }
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        nlohmann::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
