#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "sgpi/signed_graph.hpp"
#include "sgpi/ssbm.hpp"

using namespace sgpi;

TEST_SUITE_BEGIN("ssbm");

TEST_CASE("noiseless fixture has the expected edge sets") {
    auto [g, truth] = sample_raw(4, 1.0, 0.0, 0.0, 1.0, 42);
    CHECK(g.pos_edge_count() == 2);
    CHECK(g.neg_edge_count() == 4);
    CHECK(g.pos_neighbors(0)[0] == 1);
    CHECK(g.pos_neighbors(2)[0] == 3);
    CHECK(g.neg_neighbors(0).size() == 2);
    CHECK(g.neg_neighbors(0)[0] == 2);
    CHECK(g.neg_neighbors(0)[1] == 3);
    CHECK(g.neg_neighbors(1).size() == 2);
    CHECK(truth.labels == std::vector<int>{1, 1, -1, -1});
}

TEST_CASE("identical seed reproduces identical graphs") {
    const SsbmParams params{200, 8.0, 3.0, 2.0, 6.0};
    auto [g1, t1] = sample(params, 1234);
    auto [g2, t2] = sample(params, 1234);
    CHECK(g1 == g2);
    CHECK(t1.labels == t2.labels);
    auto [g3, t3] = sample(params, 1235);
    CHECK(g1 != g3);
}

TEST_CASE("empty graph from zero probabilities") {
    auto [g, truth] = sample_raw(6, 0.0, 0.0, 0.0, 0.0, 9);
    CHECK(g.pos_edge_count() == 0);
    CHECK(g.neg_edge_count() == 0);
    CHECK(g.node_count() == 6);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(sample_raw(5, 0.1, 0.1, 0.1, 0.1, 0),
                    std::invalid_argument);  // odd n
    CHECK_THROWS_AS(sample_raw(6, 1.1, 0.0, 0.0, 0.0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_raw(6, -0.1, 0.0, 0.0, 0.0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_raw(6, 0.7, 0.6, 0.0, 0.0, 0),
                    std::invalid_argument);  // p+ + p- > 1

    SsbmParams bad{300, 16.0, 9.0, 0.0, 9.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    SsbmParams odd{301, 16.0, 9.0, 1.0, 9.0};
    CHECK_THROWS_AS(odd.validate(), std::invalid_argument);
    // p+ = 16 log(20)/20 > 1: valid rate, inadmissible probability
    SsbmParams tiny{20, 16.0, 9.0, 1.0, 9.0};
    CHECK_THROWS_AS(tiny.validate(), std::invalid_argument);

    SsbmParams good{300, 16.0, 9.0, 1.0, 9.0};
    good.validate();
    CHECK(good.assumption_ordering_holds());
    SsbmParams crossed{300, 9.0, 16.0, 1.0, 9.0};
    crossed.validate();  // ordering is a warning, not an error
    CHECK_FALSE(crossed.assumption_ordering_holds());
}

TEST_CASE("ground truth is balanced") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto [g, truth] = sample_raw(30, 0.3, 0.2, 0.1, 0.4, seed);
        CHECK(std::accumulate(truth.labels.begin(), truth.labels.end(), 0) ==
              0);
    }
}

TEST_CASE("positive edge count concentrates at n=100") {
    // E[N+] = (n^2/4 - n/2) p+ + (n^2/4) q+ = 1475, sd ~ 28.9
    const double mean = (2500.0 - 50.0) * 0.5 + 2500.0 * 0.1;
    const double sd = std::sqrt((2500.0 - 50.0) * 0.25 + 2500.0 * 0.09);
    for (std::uint64_t seed = 11; seed < 16; ++seed) {
        auto [g, truth] = sample_raw(100, 0.5, 0.1, 0.1, 0.5, seed);
        CHECK(std::abs(static_cast<double>(g.pos_edge_count()) - mean) <=
              4.0 * sd);
    }
}

TEST_CASE("within-community frequency matches p+ at n=2000") {
    const SsbmParams params{2000, 16.0, 9.0, 9.0, 16.0};
    const double p_plus = params.p_plus();
    const NodeId half = params.n / 2;
    const double pairs_per_sample =
        2.0 * (half * (half - 1.0) / 2.0);
    long long within_pos = 0;
    const int samples = 20;
    for (int s = 0; s < samples; ++s) {
        auto [g, truth] = sample(params, 7000 + s);
        for (NodeId i = 0; i < params.n; ++i) {
            const bool left = i < half;
            for (const NodeId j : g.pos_neighbors(i)) {
                if (j <= i) continue;
                if ((j < half) == left) ++within_pos;
            }
        }
    }
    const double draws = pairs_per_sample * samples;
    const double freq = static_cast<double>(within_pos) / draws;
    const double se = std::sqrt(p_plus * (1.0 - p_plus) / draws);
    CHECK(std::abs(freq - p_plus) <= 3.0 * se);
}

TEST_CASE("edge counts satisfy the concentration envelope at n=2000") {
    // |N+ - a(alpha+ + beta+)| <= (sqrt(n) + alpha+/2) log n in >= 95/100
    const SsbmParams params{2000, 4.0, 2.0, 2.0, 4.0};
    const double log_n = std::log(2000.0);
    const double a = 2000.0 * log_n / 4.0;
    const double center = a * (params.alpha_plus + params.beta_plus);
    const double envelope =
        (std::sqrt(2000.0) + params.alpha_plus / 2.0) * log_n;
    int inside = 0;
    for (int s = 0; s < 100; ++s) {
        auto [g, truth] = sample(params, 9000 + s);
        if (std::abs(static_cast<double>(g.pos_edge_count()) - center) <=
            envelope)
            ++inside;
    }
    CHECK(inside >= 95);
}

TEST_CASE("it_gap") {
    // all perfect squares, so the doubles are exact
    CHECK(it_gap({0, 16.0, 9.0, 9.0, 16.0}) == 0.0);  // threshold circle
    CHECK(it_gap({0, 7.0, 7.0, 3.0, 3.0}) == -2.0);
    CHECK(it_gap({0, 16.0, 9.0, 1.0, 9.0}) == 3.0);
    CHECK(it_gap({0, 25.0, 9.0, 1.0, 16.0}) == 11.0);
}

TEST_SUITE_END();
