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

#ifndef CFMIMO_PRECODING_HPP
#define CFMIMO_PRECODING_HPP

#include "cfmimo/types.hpp"

namespace cfmimo {

// Zero-forcing precoder from the (typically sparsified) channel estimate:
//   raw = conj(G) * inv(transpose(G) * conj(G))   so transpose(G) * raw = I_n,
// and w is raw with each column scaled to unit Euclidean norm.
// Throws singular_channel when the Gram matrix condition number exceeds 1e12.
Precoder zf(const arma::cx_mat &g_a_hat);

// Composed transmit matrix P_a = w * diag(d); column k then has norm d_k.
arma::cx_mat compose(const Precoder &w, const PowerVector &d);

} // namespace cfmimo

#endif
