// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "cfmimo/precoding.hpp"
#include "cfmimo/rng.hpp"

using namespace cfmimo;

TEST_CASE("zf on identity-embedded channel returns those columns") {
    const arma::uword m = 5, n = 3;
    arma::cx_mat g(m, n, arma::fill::zeros);
    for (arma::uword k = 0; k < n; ++k)
        g(k, k) = 1.0;
    const Precoder p = zf(g);
    CHECK(arma::abs(p.raw - g).max() < 1e-12);
    CHECK(arma::abs(p.w - g).max() < 1e-12);
}

TEST_CASE("zf residual on random well-conditioned instances") {
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const arma::cx_mat g = rng.cgaussian_mat(12, 4);
        const Precoder p = zf(g);
        const double res = arma::abs(g.st() * p.raw - arma::eye<arma::cx_mat>(4, 4)).max();
        CHECK(res < 1e-8);
        for (arma::uword k = 0; k < 4; ++k)
            CHECK(std::abs(arma::norm(p.w.col(k)) - 1.0) < 1e-10);
    }
}

TEST_CASE("zf homogeneity: scaling the channel rescales raw, not w") {
    Rng rng(8);
    const arma::cx_mat g = rng.cgaussian_mat(10, 3);
    const Precoder p1 = zf(g);
    const Precoder p2 = zf(arma::cx_mat(2.0 * g));
    CHECK(arma::abs(p2.raw - 0.5 * p1.raw).max() < 1e-10);
    CHECK(arma::abs(p2.w - p1.w).max() < 1e-10);
}

TEST_CASE("zf support stays within the sparsity pattern of the input") {
    Rng rng(14);
    arma::cx_mat g = rng.cgaussian_mat(8, 2);
    g.rows(4, 7).zeros(); // antennas 4..7 inactive for both UEs
    const Precoder p = zf(g);
    CHECK(arma::abs(p.raw.rows(4, 7)).max() == 0.0);
    CHECK(arma::abs(p.w.rows(4, 7)).max() == 0.0);
}

TEST_CASE("zf flags singular channels") {
    arma::cx_mat g(4, 2, arma::fill::zeros);
    g.col(0).fill(1.0);
    g.col(1).fill(1.0); // rank deficient
    CHECK_THROWS_AS(zf(g), singular_channel);

    arma::cx_mat wide(2, 4, arma::fill::ones);
    CHECK_THROWS_AS(zf(wide), std::invalid_argument);
}

TEST_CASE("compose scales columns by the power entries") {
    Rng rng(6);
    const arma::cx_mat g = rng.cgaussian_mat(9, 3);
    const Precoder p = zf(g);

    PowerVector ones;
    ones.d = arma::vec(3, arma::fill::ones);
    CHECK(arma::abs(compose(p, ones) - p.w).max() < 1e-14);

    PowerVector zero;
    zero.d = arma::vec(3, arma::fill::zeros);
    CHECK(arma::abs(compose(p, zero)).max() == 0.0);

    PowerVector d;
    d.d = {0.5, 2.0, 1.25};
    const arma::cx_mat pa = compose(p, d);
    for (arma::uword k = 0; k < 3; ++k)
        CHECK(arma::norm(pa.col(k)) == doctest::Approx(d.d(k)).epsilon(1e-12));

    // Frobenius identity, the quantity the power projections rely on
    const double fro2 = std::pow(arma::norm(pa, "fro"), 2);
    CHECK(fro2 == doctest::Approx(arma::dot(d.d, d.d)).epsilon(1e-10));

    PowerVector neg;
    neg.d = {-0.1, 1.0, 1.0};
    CHECK_THROWS_AS(compose(p, neg), std::invalid_argument);
}
