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

#ifndef CFMIMO_CLUSTER_SCHED_HPP
#define CFMIMO_CLUSTER_SCHED_HPP

#include "cfmimo/types.hpp"

namespace cfmimo {

// Arithmetic mean of all M*K LSF entries; the network-wide clustering threshold.
double lsf_threshold(const LsfMatrix &beta);

// Top-n UE indices by squared column norm of the estimated channel, in
// descending order; ties broken by lower index.
Schedule schedule_greedy(const arma::cx_mat &g_hat_full, arma::uword n);

// Per-UE serving sets: AP a serves scheduled UE k iff beta(a,k) >= threshold,
// or a has the strongest LSF for k. The mask is replicated across each AP's
// antennas, so every column has at least one whole AP active.
ClusterMask cluster(const LsfMatrix &beta, const Schedule &schedule, double threshold,
                    arma::uword ants_per_ap);

// Entrywise product of the estimated channel with the cluster mask.
arma::cx_mat sparsify(const arma::cx_mat &g_hat, const ClusterMask &mask);

} // namespace cfmimo

#endif
