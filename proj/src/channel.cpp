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

#include <cmath>

namespace cfmimo {

void SystemConfig::validate() const {
    if (num_aps == 0 || ants_per_ap == 0 || num_ues == 0 || num_sched == 0)
        throw std::invalid_argument("network counts must be positive");
    if (!(area_side > 0.0))
        throw std::invalid_argument("area_side must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must satisfy 0 < alpha < 1");
    if (num_sched > total_ants())
        throw std::invalid_argument("num_sched cannot exceed the total antenna count");
    if (total_ants() > num_ues)
        throw std::invalid_argument("candidate UE count must be at least the total antenna count");
    if (!(rho_f > 0.0) || !(sigma_w2 > 0.0) || !(p_max > 0.0))
        throw std::invalid_argument("powers and variances must be strictly positive");
    if (kappa1 != 0.0 || kappa2 != 0.0) {
        if (!(kappa1 > 0.0) || !(kappa2 >= kappa1))
            throw std::invalid_argument("explicit kappa bounds require 0 < kappa1 <= kappa2");
    } else {
        if (!(kappa1_scale > 0.0) || !(kappa2_scale >= kappa1_scale))
            throw std::invalid_argument("kappa auto band requires 0 < kappa1_scale <= kappa2_scale");
    }
    if (sigma_sh_db < 0.0)
        throw std::invalid_argument("sigma_sh_db cannot be negative");
    if (n_sym == 0)
        throw std::invalid_argument("n_sym must be positive");
    if (!(lambda_scale >= 0.0))
        throw std::invalid_argument("lambda_scale cannot be negative");
    if (gd_iters == 0)
        throw std::invalid_argument("gd_iters must be positive");
}

Topology place_nodes(const SystemConfig &config, Rng &rng) {
    config.validate();
    Topology topo;
    topo.ap_positions.set_size(2, config.num_aps);
    topo.ue_positions.set_size(2, config.num_ues);
    for (arma::uword a = 0; a < config.num_aps; ++a) {
        topo.ap_positions(0, a) = rng.uniform(0.0, config.area_side);
        topo.ap_positions(1, a) = rng.uniform(0.0, config.area_side);
    }
    for (arma::uword k = 0; k < config.num_ues; ++k) {
        topo.ue_positions(0, k) = rng.uniform(0.0, config.area_side);
        topo.ue_positions(1, k) = rng.uniform(0.0, config.area_side);
    }
    return topo;
}

namespace {

// Hata-COST231 fixed loss for f = 1900 MHz, h_AP = 15 m, h_u = 1.65 m:
//   46.3 + 33.9 log10(f) - 13.82 log10(h_AP) - (1.1 log10(f) - 0.7) h_u
//        + (1.56 log10(f) - 0.8)
constexpr double k_hata_const_db = 140.715083703908419;
constexpr double k_d0_km = 0.01;
constexpr double k_d1_km = 0.05;

} // namespace

double pathloss_linear(double distance_m) {
    if (distance_m < 0.0)
        throw std::invalid_argument("distance cannot be negative");
    const double d_km = distance_m / 1000.0;
    double pl_db;
    if (d_km > k_d1_km) {
        pl_db = -k_hata_const_db - 35.0 * std::log10(d_km);
    } else if (d_km > k_d0_km) {
        pl_db = -k_hata_const_db - 15.0 * std::log10(k_d1_km) - 20.0 * std::log10(d_km);
    } else {
        pl_db = -k_hata_const_db - 15.0 * std::log10(k_d1_km) - 20.0 * std::log10(k_d0_km);
    }
    return std::pow(10.0, pl_db / 10.0);
}

LsfMatrix lsf(const Topology &topology, const SystemConfig &config, Rng &rng) {
    const arma::uword L = topology.ap_positions.n_cols;
    const arma::uword K = topology.ue_positions.n_cols;
    const arma::uword N = config.ants_per_ap;

    LsfMatrix out;
    out.beta.set_size(L * N, K);
    // Shadowing draw order: AP-major, then UE.
    for (arma::uword a = 0; a < L; ++a) {
        for (arma::uword k = 0; k < K; ++k) {
            const double dx = topology.ap_positions(0, a) - topology.ue_positions(0, k);
            const double dy = topology.ap_positions(1, a) - topology.ue_positions(1, k);
            const double dist = std::sqrt(dx * dx + dy * dy);
            const double pl = pathloss_linear(dist);
            const double shadow = std::pow(10.0, config.sigma_sh_db * rng.gaussian() / 10.0);
            const double b = pl * shadow;
            for (arma::uword i = 0; i < N; ++i)
                out.beta(a * N + i, k) = b;
        }
    }
    return out;
}

ChannelSet draw_channel(const arma::mat &beta_sched, double alpha, Rng &rng) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must satisfy 0 < alpha < 1");
    const arma::uword m = beta_sched.n_rows;
    const arma::uword n = beta_sched.n_cols;

    const arma::mat amp = arma::sqrt(beta_sched);
    const arma::cx_mat h = rng.cgaussian_mat(m, n);
    const arma::cx_mat h_err = rng.cgaussian_mat(m, n);

    ChannelSet cs;
    cs.g_hat = std::sqrt(1.0 - alpha) * (amp % h);
    cs.g_err = std::sqrt(alpha) * (amp % h_err);
    cs.g_true = cs.g_hat + cs.g_err;
    cs.beta_sched = beta_sched;
    return cs;
}

} // namespace cfmimo
