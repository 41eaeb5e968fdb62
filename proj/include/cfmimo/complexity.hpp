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

#ifndef CFMIMO_COMPLEXITY_HPP
#define CFMIMO_COMPLEXITY_HPP

#include "cfmimo/types.hpp"

namespace cfmimo {

// Leading-order FLOP count of the closed-form allocator over a coherence
// interval: n_sym * (n^3 + m_total * n^2). With detailed = true the
// lower-order terms (effective-matrix build, regularization parameter, and
// projections) are included.
double flops_rlspa(arma::uword m_total, arma::uword n, arma::uword n_sym,
                   bool detailed = false);

// Robust gradient-descent baseline: 4 * iters * m_total * n^2.
double flops_rgdpa(arma::uword m_total, arma::uword n, arma::uword iters);

// Non-robust gradient-descent baseline: 3 * iters * m_total * n^2.
double flops_gdpa(arma::uword m_total, arma::uword n, arma::uword iters);

} // namespace cfmimo

#endif
