#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sgpi/estimation.hpp"
#include "sgpi/rng.hpp"
#include "sgpi/ssbm.hpp"

using namespace sgpi;

namespace {

// Noiseless moments C = a(alpha+beta), D = b(alpha^3 + 3 alpha beta^2).
std::pair<double, double> noiseless_moments(double alpha, double beta,
                                            NodeId n) {
    const double log_n = std::log(static_cast<double>(n));
    const double a = static_cast<double>(n) * log_n / 4.0;
    const double b = log_n * log_n * log_n / 24.0;
    return {a * (alpha + beta),
            b * (alpha * alpha * alpha + 3.0 * alpha * beta * beta)};
}

}  // namespace

TEST_SUITE_BEGIN("estimation");

TEST_CASE("cubic inversion at (16, 9)") {
    // radicand is (3.5 log n)^3, so the root is analytic
    const auto [c, d] = noiseless_moments(16.0, 9.0, 1000);
    const auto [x, y] = solve_cubic_system(c, d, 1000);
    CHECK(x == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(y == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("cubic inversion degenerate equal-rate case") {
    // D = 8C^3 / (6 n^3) zeroes the radicand; x = y = 2C/(n log n)
    const NodeId n = 500;
    const double c = 1234.5;
    const double d = 8.0 * c * c * c / (6.0 * 500.0 * 500.0 * 500.0);
    const auto [x, y] = solve_cubic_system(c, d, n);
    const double expected = 2.0 * c / (500.0 * std::log(500.0));
    CHECK(x == doctest::Approx(expected).epsilon(1e-12));
    CHECK(y == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cubic inversion with negative radicand (9, 16)") {
    const auto [c, d] = noiseless_moments(9.0, 16.0, 2000);
    const auto [x, y] = solve_cubic_system(c, d, 2000);
    CHECK(std::abs(x - 9.0) / 9.0 <= 1e-9);
    CHECK(std::abs(y - 16.0) / 16.0 <= 1e-9);
}

TEST_CASE("cubic inversion is exact across random rates and sizes") {
    SplitMix64 rng(20240601);
    for (int rep = 0; rep < 200; ++rep) {
        const double alpha = 0.5 + 29.5 * rng.next_unit();
        const double beta = 0.5 + 29.5 * rng.next_unit();
        const double ln_n =
            std::log(8.0) + (std::log(1e6) - std::log(8.0)) * rng.next_unit();
        const NodeId n = static_cast<NodeId>(std::lround(std::exp(ln_n)));
        const auto [c, d] = noiseless_moments(alpha, beta, n);
        const auto [x, y] = solve_cubic_system(c, d, n);
        CHECK(std::abs(x - alpha) / alpha <= 1e-9);
        CHECK(std::abs(y - beta) / beta <= 1e-9);
    }
}

TEST_CASE("cubic rejects n < 2") {
    CHECK_THROWS_AS(solve_cubic_system(1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("estimate_params on noiseless symmetric moments") {
    const NodeId n = 5000;
    const auto [cp, dp] = noiseless_moments(16.0, 9.0, n);
    const auto [cm, dm] = noiseless_moments(9.0, 16.0, n);
    GraphMoments m;
    m.n_pos = static_cast<std::int64_t>(std::llround(cp));
    m.t_pos = static_cast<std::int64_t>(std::llround(dp));
    m.n_neg = static_cast<std::int64_t>(std::llround(cm));
    m.t_neg = static_cast<std::int64_t>(std::llround(dm));
    const EstimatedParams est = estimate_params(m, n);
    CHECK(est.alpha_hat_plus == doctest::Approx(16.0).epsilon(1e-3));
    CHECK(est.beta_hat_plus == doctest::Approx(9.0).epsilon(1e-3));
    CHECK(est.alpha_hat_minus == doctest::Approx(9.0).epsilon(1e-3));
    CHECK(est.beta_hat_minus == doctest::Approx(16.0).epsilon(1e-3));
    REQUIRE(est.xi_hat.has_value());
    CHECK(*est.xi_hat == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(est.plausible);
}

TEST_CASE("estimate_params with empty negative subgraph") {
    GraphMoments m;
    m.n_pos = 300;
    m.t_pos = 40;
    const EstimatedParams est = estimate_params(m, 200);
    CHECK(est.alpha_hat_minus == 0.0);
    CHECK(est.beta_hat_minus == 0.0);
    CHECK_FALSE(est.xi_hat.has_value());
    CHECK_FALSE(est.plausible);
}

TEST_CASE("estimate_params satisfies the linear edge constraint") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto [g, truth] = sample_raw(60, 0.3, 0.1, 0.1, 0.4, seed);
        const GraphMoments m = count_moments(g);
        const EstimatedParams est = estimate_params(m, 60);
        const double target =
            4.0 * static_cast<double>(m.n_pos) / (60.0 * std::log(60.0));
        const double sum = est.alpha_hat_plus + est.beta_hat_plus;
        CHECK(std::abs(sum - target) <= 1e-12 * std::max(1.0, target));
        const double target_neg =
            4.0 * static_cast<double>(m.n_neg) / (60.0 * std::log(60.0));
        const double sum_neg = est.alpha_hat_minus + est.beta_hat_minus;
        CHECK(std::abs(sum_neg - target_neg) <= 1e-12 * std::max(1.0, target_neg));
    }
}

TEST_CASE("xi_hat concentrates near 1 on sampled symmetric graphs") {
    const SsbmParams params{5000, 16.0, 9.0, 9.0, 16.0};
    int close = 0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        auto [g, truth] = sample(params, 31000 + s);
        const EstimatedParams est = estimate_params(count_moments(g), params.n);
        if (est.xi_hat && std::abs(*est.xi_hat - 1.0) <= 0.3) ++close;
    }
    CHECK(close >= 18);  // >= 90% of 20 seeds
}

TEST_CASE("xi_exact") {
    CHECK(xi_exact({0, 16.0, 9.0, 9.0, 16.0}) == 1.0);
    const double e1 = std::exp(1.0);
    CHECK(xi_exact({0, e1, 1.0, 1.0, e1 * e1}) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // log(4) / log(16/9), cross-checked against arbitrary-precision logs
    CHECK(xi_exact({0, 16.0, 9.0, 4.0, 16.0}) ==
          doctest::Approx(2.409420839653209).epsilon(1e-13));
    CHECK_THROWS_AS(xi_exact({0, 9.0, 9.0, 4.0, 16.0}), std::invalid_argument);
    CHECK_THROWS_AS(xi_exact({0, 16.0, 9.0, 0.0, 16.0}),
                    std::invalid_argument);
}

TEST_CASE("mle_weights") {
    SUBCASE("equal rate sums cancel the correction") {
        const MleWeights w = mle_weights({0, 16.0, 9.0, 9.0, 16.0}, 3000);
        const double expected = std::log(16.0 / 9.0);
        CHECK(w.mu_n == doctest::Approx(expected).epsilon(1e-12));
        CHECK(w.nu_n == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("identical communities give zero weights") {
        const MleWeights w = mle_weights({0, 9.0, 9.0, 4.0, 4.0}, 3000);
        CHECK(w.mu_n == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(w.nu_n == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("weight ratio approaches xi_exact monotonically") {
        const SsbmParams params{0, 16.0, 9.0, 4.0, 16.0};
        const double xi = xi_exact(params);
        double prev_gap = 1e9;
        for (const NodeId n : {300, 3000, 30000}) {
            const MleWeights w = mle_weights(params, n);
            const double gap = std::abs(w.nu_n / w.mu_n - xi);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
    }
    SUBCASE("ratio is within 0.01 of the limit at n = 1e6") {
        const SsbmParams params{0, 16.0, 9.0, 4.0, 16.0};
        const MleWeights w = mle_weights(params, 1000000);
        CHECK(std::abs(w.nu_n / w.mu_n - xi_exact(params)) <= 0.01);
    }
    SUBCASE("non-positive logarithm arguments throw") {
        CHECK_THROWS_AS(mle_weights({0, 16.0, 9.0, 9.0, 16.0}, 20),
                        std::invalid_argument);
        CHECK_THROWS_AS(mle_weights({0, 0.0, 9.0, 9.0, 16.0}, 3000),
                        std::invalid_argument);
    }
}

TEST_SUITE_END();
