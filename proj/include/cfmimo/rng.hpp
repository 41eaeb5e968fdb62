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

#ifndef CFMIMO_RNG_HPP
#define CFMIMO_RNG_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <random>

namespace cfmimo {

// Seeded random source with a fully specified draw discipline so that golden
// files stay reproducible. Gaussians come from Box-Muller over exactly two
// 53-bit uniforms per pair; matrices fill column-major.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform on [0, 1)
    double uniform() {
        return (eng_() >> 11) * 0x1.0p-53;
    }

    // uniform on [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) // log(0) guard; probability 2^-53 per draw
            u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * arma::datum::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // standard complex normal CN(0,1): real and imaginary parts N(0, 1/2)
    std::complex<double> cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * 0.70710678118654752440, im * 0.70710678118654752440};
    }

    arma::mat gaussian_mat(arma::uword rows, arma::uword cols) {
        arma::mat out(rows, cols);
        for (arma::uword j = 0; j < cols; ++j)
            for (arma::uword i = 0; i < rows; ++i)
                out(i, j) = gaussian();
        return out;
    }

    arma::cx_mat cgaussian_mat(arma::uword rows, arma::uword cols) {
        arma::cx_mat out(rows, cols);
        for (arma::uword j = 0; j < cols; ++j)
            for (arma::uword i = 0; i < rows; ++i)
                out(i, j) = cgaussian();
        return out;
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Counter-based derivation of per-trial seeds from a master seed (splitmix64
// finalizer). Trials can run in parallel with independent generators.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace cfmimo

#endif
