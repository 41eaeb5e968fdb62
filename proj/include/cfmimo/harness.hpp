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

#ifndef CFMIMO_HARNESS_HPP
#define CFMIMO_HARNESS_HPP

#include "cfmimo/rng.hpp"
#include "cfmimo/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cfmimo {

enum class method_t { rlspa, rgdpa_style, gdpa_style, epa };

std::string method_name(method_t m);
method_t method_from_name(const std::string &name);

struct ExperimentSpec {
    SystemConfig base;
    std::vector<double> snr_grid_db = {0.0, 5.0, 10.0, 15.0, 20.0};
    std::vector<method_t> methods = {method_t::rlspa, method_t::rgdpa_style,
                                     method_t::gdpa_style, method_t::epa};
    arma::uword trials = 200;
    arma::uword symbols_per_trial = 8;
    std::vector<double> lambda_sweep; // optional multipliers for sweep runs
    std::string output_path = "results.csv";
    arma::uword threads = 1;

    void validate() const;
};

struct ResultRow {
    std::string method;
    double snr_db = 0.0;
    double mean_sr = 0.0;
    double std_sr = 0.0;
    arma::uword trials = 0;
    std::uint64_t seed = 0;
};

struct ComplexityRow {
    std::string method;
    arma::uword m_total = 0;
    double flops = 0.0;
};

struct ResultTable {
    std::vector<ResultRow> rows;
    std::vector<ComplexityRow> complexity;
    arma::uword failed_trials = 0;
};

// Everything held fixed within one coherence block: geometry, LSF, schedule,
// clusters, channel realization, ZF precoder, and the resolved error-norm
// bound used by the robust allocators.
struct TrialBlock {
    Topology topo;
    LsfMatrix beta;
    Schedule sched;
    ClusterMask mask;
    ChannelSet chan;       // scheduled columns only
    Precoder precoder;     // ZF on the sparsified estimate
    double kappa2_eff = 0; // resolved error-norm bound for this block
    double kappa1_eff = 0;
};

// Generates one block from the trial random stream. Draw order: positions,
// shadowing, small-scale, error. Throws singular_channel on a degenerate draw.
TrialBlock make_trial_block(const SystemConfig &config, Rng &rng);

// Allocates power for one symbol with the given method. config must carry the
// effective rho_f and resolved kappa2.
PowerVector allocate(method_t method, const TrialBlock &block, const arma::cx_vec &x,
                     const SystemConfig &config);

// One Monte Carlo trial: block generation (bounded redraw on degenerate
// channels, at most 10 attempts), then per-symbol allocation and sum-rate
// evaluation, averaged over symbols_per_trial symbols. rho_f is set to
// 10^(snr_db/10) * sigma_w2.
SumRateSample run_trial(const SystemConfig &config, double snr_db, method_t method, Rng &rng,
                        arma::uword symbols_per_trial = 8);

// Full sweep over (method, snr) with `trials` independent trials each.
// Per-trial seeds derive from the master seed by trial index only, so every
// method and SNR point sees identical channels, schedules, and symbols.
// Trials that exhaust redraws are excluded and counted in failed_trials.
ResultTable run_experiment(const ExperimentSpec &spec);

// Re-runs the experiment once per lambda multiplier, tagging row labels with
// the multiplier. The 1.0 row matches the plain experiment.
ResultTable lambda_sweep(const ExperimentSpec &spec);

// Writes the result CSV (header: method,snr_db,mean_sr,std_sr,trials,seed),
// a JSON sidecar with the fully resolved spec at path + ".json", and, when
// complexity rows are present, a companion <stem>_flops.csv.
void emit(const ResultTable &table, const ExperimentSpec &spec, const std::string &path);

// Parses a CSV produced by emit (rows only; used for round-trip checks).
ResultTable parse_result_csv(const std::string &path);

// FLOP comparison table over an AP-count sweep at fixed n, N, n_sym, iters.
ResultTable complexity_table(const SystemConfig &config,
                             const std::vector<arma::uword> &ap_counts);

// Fast seeded self-checks of the numeric core (identities, Monte Carlo
// moments, KKT residuals). Prints one line per check; returns the number of
// failures.
int selfcheck(std::uint64_t seed, bool verbose = true);

} // namespace cfmimo

#endif
