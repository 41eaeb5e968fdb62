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

#ifndef CFMIMO_CHANNEL_HPP
#define CFMIMO_CHANNEL_HPP

#include "cfmimo/rng.hpp"
#include "cfmimo/types.hpp"

namespace cfmimo {

// AP and UE positions i.i.d. uniform on the square [0, area_side]^2.
// Draw order: AP x/y pairs first, then UE x/y pairs.
Topology place_nodes(const SystemConfig &config, Rng &rng);

// Three-slope distance-based pathloss in linear scale. Distances below the
// near-field reference d0 = 10 m are clamped to the plateau value. Parameters:
// carrier 1900 MHz, AP height 15 m, UE height 1.65 m, breakpoints
// d0 = 10 m and d1 = 50 m, Hata-COST231 fixed loss.
double pathloss_linear(double distance_m);

// Large-scale fading beta[m,k] = PL(dist) * 10^(sigma_sh * z / 10) with
// z ~ N(0,1) drawn once per (AP, UE) pair (AP-major, then UE) and replicated
// across the AP's antenna rows.
LsfMatrix lsf(const Topology &topology, const SystemConfig &config, Rng &rng);

// One small-scale realization over the given LSF slice:
//   g_hat = sqrt(1-alpha) * sqrt(beta) .* h,   g_err = sqrt(alpha) * sqrt(beta) .* h~
// with h, h~ i.i.d. CN(0,1). All h entries are drawn before all h~ entries,
// column-major. g_true is the exact entrywise sum.
ChannelSet draw_channel(const arma::mat &beta_sched, double alpha, Rng &rng);

} // namespace cfmimo

#endif
