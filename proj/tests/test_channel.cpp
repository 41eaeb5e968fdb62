// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "cfmimo/channel.hpp"

using namespace cfmimo;

namespace {
SystemConfig small_config() {
    SystemConfig cfg;
    cfg.num_aps = 5;
    cfg.ants_per_ap = 2;
    cfg.num_ues = 20;
    cfg.num_sched = 4;
    cfg.area_side = 400.0;
    return cfg;
}
} // namespace

TEST_CASE("place_nodes draws inside the square and is seed-deterministic") {
    SystemConfig cfg;
    Rng rng(7);
    const Topology topo = place_nodes(cfg, rng);
    CHECK(topo.ap_positions.n_cols == 25);
    CHECK(topo.ue_positions.n_cols == 200);
    CHECK(topo.ap_positions.min() >= 0.0);
    CHECK(topo.ap_positions.max() <= 400.0);
    CHECK(topo.ue_positions.min() >= 0.0);
    CHECK(topo.ue_positions.max() <= 400.0);

    Rng rng2(7);
    const Topology topo2 = place_nodes(cfg, rng2);
    CHECK(arma::approx_equal(topo.ap_positions, topo2.ap_positions, "absdiff", 0.0));
    CHECK(arma::approx_equal(topo.ue_positions, topo2.ue_positions, "absdiff", 0.0));
}

TEST_CASE("degenerate area is rejected") {
    SystemConfig cfg;
    cfg.area_side = 0.0;
    Rng rng(1);
    CHECK_THROWS_AS(place_nodes(cfg, rng), std::invalid_argument);
}

TEST_CASE("config invariants") {
    SystemConfig cfg = small_config();
    CHECK_NOTHROW(cfg.validate());

    SystemConfig bad = cfg;
    bad.alpha = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.alpha = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.num_sched = bad.total_ants() + 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.num_ues = bad.total_ants() - 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.kappa1 = 2.0;
    bad.kappa2 = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("three-slope pathloss golden values") {
    // Hand evaluation of the slope expressions with the adopted parameters
    // (1900 MHz, heights 15 m / 1.65 m, breakpoints 10 m / 50 m), cross-checked
    // with an independent script.
    const double plateau = 7.58641546916568561e-09;
    CHECK(pathloss_linear(0.0) == doctest::Approx(plateau).epsilon(1e-12));
    CHECK(pathloss_linear(5.0) == doctest::Approx(plateau).epsilon(1e-12));
    CHECK(pathloss_linear(10.0) == doctest::Approx(plateau).epsilon(1e-12));
    CHECK(pathloss_linear(30.0) == doctest::Approx(8.42935052129519991e-10).epsilon(1e-12));
    CHECK(pathloss_linear(150.0) == doctest::Approx(6.48891705675132628e-12).epsilon(1e-12));
    CHECK(pathloss_linear(400.0) == doctest::Approx(2.09547102466623978e-13).epsilon(1e-12));
}

TEST_CASE("pathloss is non-increasing in distance") {
    double prev = pathloss_linear(0.0);
    for (double d = 1.0; d <= 600.0; d += 1.0) {
        const double cur = pathloss_linear(d);
        CHECK(cur <= prev + 1e-30);
        prev = cur;
    }
    CHECK(pathloss_linear(100.0) >= pathloss_linear(200.0));
}

TEST_CASE("lsf replicates rows per AP and reduces to pathloss without shadowing") {
    SystemConfig cfg = small_config();
    cfg.sigma_sh_db = 0.0;
    Rng rng(3);
    const Topology topo = place_nodes(cfg, rng);
    const LsfMatrix beta = lsf(topo, cfg, rng);

    REQUIRE(beta.beta.n_rows == cfg.total_ants());
    REQUIRE(beta.beta.n_cols == cfg.num_ues);
    CHECK(beta.beta.min() > 0.0);

    for (arma::uword a = 0; a < cfg.num_aps; ++a)
        for (arma::uword k = 0; k < cfg.num_ues; ++k)
            CHECK(beta.beta(a * cfg.ants_per_ap, k) ==
                  beta.beta(a * cfg.ants_per_ap + 1, k));

    // shadowing off: entries equal pure pathloss of the AP-UE distance
    for (arma::uword a = 0; a < cfg.num_aps; ++a) {
        for (arma::uword k = 0; k < cfg.num_ues; ++k) {
            const double dist =
                arma::norm(topo.ap_positions.col(a) - topo.ue_positions.col(k));
            CHECK(beta.beta(a * cfg.ants_per_ap, k) ==
                  doctest::Approx(pathloss_linear(dist)).epsilon(1e-14));
        }
    }
}

TEST_CASE("shadowing moments match the log-normal model") {
    SystemConfig cfg = small_config();
    cfg.sigma_sh_db = 8.0;
    Rng rng(11);
    // 10^5 independent shadowing draws via single-AP single-UE geometries is
    // wasteful; draw one wide LSF matrix instead (one z per AP-UE pair).
    cfg.num_aps = 50;
    cfg.num_ues = 2000;
    const Topology topo = place_nodes(cfg, rng);
    const LsfMatrix beta = lsf(topo, cfg, rng);

    arma::vec db_dev(cfg.num_aps * cfg.num_ues);
    arma::uword idx = 0;
    for (arma::uword a = 0; a < cfg.num_aps; ++a) {
        for (arma::uword k = 0; k < cfg.num_ues; ++k) {
            const double dist =
                arma::norm(topo.ap_positions.col(a) - topo.ue_positions.col(k));
            const double pl = pathloss_linear(dist);
            db_dev(idx++) =
                10.0 * std::log10(beta.beta(a * cfg.ants_per_ap, k) / pl);
        }
    }
    CHECK(std::abs(arma::mean(db_dev)) < 0.1);
    CHECK(std::abs(arma::stddev(db_dev) - 8.0) < 0.1);
}

TEST_CASE("draw_channel decomposition and scaling") {
    Rng rng(5);
    arma::mat beta(6, 3, arma::fill::value(1.0));

    SUBCASE("exact decomposition") {
        const ChannelSet cs = draw_channel(beta, 0.15, rng);
        CHECK(arma::abs(cs.g_true - (cs.g_hat + cs.g_err)).max() == 0.0);
    }

    SUBCASE("tiny alpha gives tiny relative error energy") {
        const ChannelSet cs = draw_channel(beta, 1e-6, rng);
        const double ratio = std::pow(arma::norm(cs.g_err, "fro"), 2) /
                             std::pow(arma::norm(cs.g_true, "fro"), 2);
        CHECK(ratio < 1e-4); // expectation 1e-6; wide margin for 18 entries
    }

    SUBCASE("alpha outside (0,1) rejected") {
        CHECK_THROWS_AS(draw_channel(beta, 0.0, rng), std::invalid_argument);
        CHECK_THROWS_AS(draw_channel(beta, 1.0, rng), std::invalid_argument);
    }
}

TEST_CASE("error entry variance matches alpha * beta over many draws") {
    Rng rng(13);
    const double alpha = 0.15;
    arma::mat beta(1, 1, arma::fill::value(1.0));
    const arma::uword draws = 100000;
    double acc_err = 0.0;
    double acc_hat = 0.0;
    for (arma::uword i = 0; i < draws; ++i) {
        const ChannelSet cs = draw_channel(beta, alpha, rng);
        acc_err += std::norm(cs.g_err(0, 0));
        acc_hat += std::norm(cs.g_hat(0, 0));
    }
    CHECK(std::abs(acc_err / draws - alpha) / alpha < 0.01);
    CHECK(std::abs(acc_hat / draws - (1.0 - alpha)) / (1.0 - alpha) < 0.01);
}

TEST_CASE("draw determinism") {
    arma::mat beta(4, 2, arma::fill::value(0.5));
    Rng r1(42), r2(42);
    const ChannelSet a = draw_channel(beta, 0.3, r1);
    const ChannelSet b = draw_channel(beta, 0.3, r2);
    CHECK(arma::approx_equal(a.g_true, b.g_true, "absdiff", 0.0));
    CHECK(arma::approx_equal(a.g_hat, b.g_hat, "absdiff", 0.0));
}
