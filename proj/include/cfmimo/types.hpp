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

#ifndef CFMIMO_TYPES_HPP
#define CFMIMO_TYPES_HPP

#include <armadillo>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cfmimo {

// Numeric failure modes surfaced by the solvers and the evaluation chain.
struct singular_channel : std::runtime_error {
    explicit singular_channel(const std::string &msg) : std::runtime_error(msg) {}
};
struct singular_system : std::runtime_error {
    explicit singular_system(const std::string &msg) : std::runtime_error(msg) {}
};
struct divergence : std::runtime_error {
    explicit divergence(const std::string &msg) : std::runtime_error(msg) {}
};
struct non_convergence : std::runtime_error {
    explicit non_convergence(const std::string &msg) : std::runtime_error(msg) {}
};
struct numerical_failure : std::runtime_error {
    explicit numerical_failure(const std::string &msg) : std::runtime_error(msg) {}
};

enum class constellation_t { gaussian, qpsk };

// All scalar parameters of the network, signal, and robustness model.
//
// kappa1/kappa2 bound the squared Frobenius norm of the channel estimation
// error matrix. Setting them to 0 selects the moment-based automatic band
// kappa_i = kappa_i_scale * sum(alpha * beta) over the scheduled block,
// resolved per trial.
struct SystemConfig {
    arma::uword num_aps = 25;   // L
    arma::uword ants_per_ap = 4; // N
    arma::uword num_ues = 200;  // K candidate UEs
    arma::uword num_sched = 25; // n scheduled UEs per block
    double area_side = 400.0;   // meters
    double rho_f = 1.0;         // downlink transmit power, linear
    double sigma_w2 = 1.0;      // noise variance, linear
    double alpha = 0.15;        // CSI imperfection factor, 0 < alpha < 1
    double kappa1 = 0.0;          // 0 = auto (moment-based)
    double kappa2 = 0.0;          // 0 = auto (moment-based)
    double kappa1_scale = 5.0e-4; // auto band lower multiplier
    double kappa2_scale = 1.5e-3; // auto band upper multiplier
    double sigma_sh_db = 8.0;     // shadowing std in dB
    arma::uword n_sym = 175;      // symbols per coherence interval
    double p_max = 1.0e6;         // total power cap, linear
    std::uint64_t seed = 1;

    constellation_t constellation = constellation_t::gaussian;
    // Exact-boundary power rescale (default) versus the ratio rule that lands
    // strictly inside the feasible set; see project_total_power.
    bool tight_power_projection = true;
    double lambda_scale = 1.0;           // multiplier applied to the analytic regularization parameter
    arma::uword gd_iters = 30;           // iterations for the gradient-descent baselines

    arma::uword total_ants() const { return num_aps * ants_per_ap; }

    // Throws std::invalid_argument on the first violated invariant.
    void validate() const;
};

// Node placement for one realization.
struct Topology {
    arma::mat ap_positions; // 2 x L, meters
    arma::mat ue_positions; // 2 x K, meters
};

// Large-scale fading, M x K, linear scale. Rows of the same AP are identical.
struct LsfMatrix {
    arma::mat beta;
};

// One small-scale realization of the scheduled block: G = G_hat + G_err.
struct ChannelSet {
    arma::cx_mat g_true;  // M x n
    arma::cx_mat g_hat;   // M x n
    arma::cx_mat g_err;   // M x n
    arma::mat beta_sched; // M x n LSF slice in scheduled-UE column order
};

// Serving-AP sets as a sparsity pattern over antennas, M x n.
struct ClusterMask {
    arma::umat active;
};

// Scheduled UE indices (into 0..K-1), descending channel power.
struct Schedule {
    std::vector<arma::uword> selected;
};

// Normalized ZF directions plus the unnormalized solution for diagnostics.
struct Precoder {
    arma::cx_mat w;   // M x n, unit-norm columns
    arma::cx_mat raw; // M x n, transpose(g_a_hat) * raw = I_n
};

// Real non-negative power allocation with feasibility metadata.
struct PowerVector {
    arma::vec d;
    bool feasible = false;
};

// Effective LS system matrix of the per-symbol power allocation problem.
struct EffectiveLsMatrix {
    arma::cx_mat a; // n x n
};

// Hermitian positive-definite covariance of the residual error term.
struct ErrorCovariance {
    arma::cx_mat r; // n x n
};

struct SumRateSample {
    double sr_bits = 0.0; // bits/s/Hz
    double snr_db = 0.0;
    std::string method;
    arma::uword trial = 0;
};

struct FlopModel {
    std::string method;
    double flops = 0.0;
    arma::uword m_total = 0;
    arma::uword n = 0;
    arma::uword reps = 0; // n_sym or iteration count
};

} // namespace cfmimo

#endif
