// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "cfmimo/cluster_sched.hpp"
#include "cfmimo/rng.hpp"
#include "oracles.hpp"

using namespace cfmimo;

TEST_CASE("lsf_threshold is the arithmetic mean") {
    LsfMatrix b;
    b.beta = arma::mat(4, 3, arma::fill::ones);
    CHECK(lsf_threshold(b) == 1.0);

    b.beta = arma::mat(2, 2);
    b.beta(0, 0) = 1.0;
    b.beta(1, 0) = 3.0;
    b.beta(0, 1) = 3.0;
    b.beta(1, 1) = 1.0;
    CHECK(lsf_threshold(b) == 2.0);
}

TEST_CASE("lsf_threshold matches a second summation order") {
    Rng rng(21);
    LsfMatrix b;
    b.beta = arma::square(rng.gaussian_mat(17, 23)) + 0.01;
    const double t = lsf_threshold(b);
    // reverse-order accumulation as the independent rounding route
    double acc = 0.0;
    for (arma::sword i = static_cast<arma::sword>(b.beta.n_elem) - 1; i >= 0; --i)
        acc += b.beta(static_cast<arma::uword>(i));
    const double t2 = acc / static_cast<double>(b.beta.n_elem);
    CHECK(std::abs(t - t2) / t2 < 1e-12);
}

TEST_CASE("greedy schedule selects top column powers, ties by lower index") {
    SUBCASE("all UEs when n equals K") {
        Rng rng(3);
        const arma::cx_mat g = rng.cgaussian_mat(4, 5);
        const Schedule s = schedule_greedy(g, 5);
        REQUIRE(s.selected.size() == 5);
        for (size_t i = 1; i < s.selected.size(); ++i) {
            const double p_prev = std::pow(arma::norm(g.col(s.selected[i - 1])), 2);
            const double p_cur = std::pow(arma::norm(g.col(s.selected[i])), 2);
            CHECK(p_prev >= p_cur);
        }
    }

    SUBCASE("a scaled column dominates") {
        Rng rng(4);
        arma::cx_mat g = rng.cgaussian_mat(6, 8);
        g.col(5) *= 10.0;
        const Schedule s = schedule_greedy(g, 3);
        CHECK(s.selected[0] == 5);
    }

    SUBCASE("ties broken by lower index") {
        arma::cx_mat g(2, 3, arma::fill::zeros);
        g(0, 0) = 1.0;
        g(0, 1) = 1.0;
        g(0, 2) = 2.0;
        const Schedule s = schedule_greedy(g, 2);
        CHECK(s.selected[0] == 2);
        CHECK(s.selected[1] == 0);
    }
}

TEST_CASE("greedy schedule equals brute-force top-n") {
    Rng rng(17);
    SUBCASE("random 8x6, n=3") {
        const arma::cx_mat g = rng.cgaussian_mat(8, 6);
        const Schedule s = schedule_greedy(g, 3);
        const auto expect = oracles::brute_force_top_n(g, 3);
        CHECK(s.selected == expect);
    }
    SUBCASE("exhaustive over K <= 12") {
        for (arma::uword k_total = 1; k_total <= 12; ++k_total) {
            for (arma::uword n = 1; n <= k_total; n += 2) {
                const arma::cx_mat g = rng.cgaussian_mat(3, k_total);
                const Schedule s = schedule_greedy(g, n);
                const auto expect = oracles::brute_force_top_n(g, n);
                CHECK(s.selected == expect);
            }
        }
    }
}

TEST_CASE("cluster honors threshold and argmax fallback") {
    const arma::uword ants = 2;
    LsfMatrix b;
    b.beta.set_size(6, 4); // 3 APs x 2 antennas, 4 UEs
    b.beta.fill(0.1);
    // UE 0: all below threshold; AP 1 is its argmax
    b.beta(2, 0) = 0.2;
    b.beta(3, 0) = 0.2;
    // UE 1: all above
    b.beta.col(1).fill(10.0);

    Schedule sched;
    sched.selected = {0, 1};
    const double thr = 1.0;
    const ClusterMask mask = cluster(b, sched, thr, ants);

    REQUIRE(mask.active.n_rows == 6);
    REQUIRE(mask.active.n_cols == 2);

    // fallback: exactly AP 1 serves UE 0
    CHECK(arma::accu(mask.active.col(0)) == ants);
    CHECK(mask.active(2, 0) == 1);
    CHECK(mask.active(3, 0) == 1);
    // saturated: full column
    CHECK(arma::accu(mask.active.col(1)) == 6);
}

TEST_CASE("cluster mask invariants on random instances") {
    Rng rng(33);
    const arma::uword ants = 2, n_aps = 6, k_total = 15, n = 5;
    LsfMatrix b;
    b.beta.set_size(n_aps * ants, k_total);
    for (arma::uword a = 0; a < n_aps; ++a)
        for (arma::uword k = 0; k < k_total; ++k) {
            const double v = std::pow(10.0, 2.0 * rng.uniform() - 1.0);
            b.beta(a * ants, k) = v;
            b.beta(a * ants + 1, k) = v;
        }
    Schedule sched;
    for (arma::uword i = 0; i < n; ++i)
        sched.selected.push_back(i * 2);
    const double thr = lsf_threshold(b);
    const ClusterMask mask = cluster(b, sched, thr, ants);

    for (arma::uword col = 0; col < n; ++col) {
        const arma::uword ue = sched.selected[col];
        // argmax AP is always included
        arma::uword best_ap = 0;
        double best = -1.0;
        for (arma::uword a = 0; a < n_aps; ++a)
            if (b.beta(a * ants, ue) > best) {
                best = b.beta(a * ants, ue);
                best_ap = a;
            }
        CHECK(mask.active(best_ap * ants, col) == 1);
        CHECK(arma::accu(mask.active.col(col)) >= ants);
        for (arma::uword a = 0; a < n_aps; ++a) {
            // antennas of one AP agree
            CHECK(mask.active(a * ants, col) == mask.active(a * ants + 1, col));
            // mask/LSF consistency
            if (mask.active(a * ants, col) == 1 && a != best_ap)
                CHECK(b.beta(a * ants, ue) >= thr);
        }
    }
}

TEST_CASE("sparsify masks entries and shrinks the norm") {
    Rng rng(9);
    const arma::cx_mat g = rng.cgaussian_mat(6, 3);

    ClusterMask full;
    full.active.ones(6, 3);
    CHECK(arma::approx_equal(sparsify(g, full), g, "absdiff", 0.0));

    ClusterMask minimal;
    minimal.active.zeros(6, 3);
    minimal.active.submat(0, 0, 1, 0).fill(1);
    minimal.active.submat(2, 1, 3, 1).fill(1);
    minimal.active.submat(4, 2, 5, 2).fill(1);
    const arma::cx_mat s = sparsify(g, minimal);
    for (arma::uword col = 0; col < 3; ++col) {
        arma::uword nnz = 0;
        for (arma::uword rowi = 0; rowi < 6; ++rowi)
            if (std::abs(s(rowi, col)) > 0.0)
                ++nnz;
        CHECK(nnz <= 2);
    }
    CHECK(arma::norm(s, "fro") <= arma::norm(g, "fro"));
}
