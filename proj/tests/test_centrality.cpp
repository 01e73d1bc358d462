#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "netdiff/centrality.hpp"
#include "test_util.hpp"

using namespace netdiff;

namespace {

CentralityConfig make_cfg(double alpha, StartVector start = StartVector::Default) {
    CentralityConfig cfg;
    cfg.alpha = alpha;
    cfg.start = start;
    return cfg;
}

} // namespace

TEST_CASE("pagerank trivial cases") {
    SUBCASE("2-cycle symmetry") {
        Graph g = testutil::directed_cycle(2);
        auto r = pagerank(g, make_cfg(0.85));
        CHECK(r.converged);
        CHECK(r.scores[0] == doctest::Approx(0.5));
        CHECK(r.scores[1] == doctest::Approx(0.5));
    }
    SUBCASE("alpha=0 returns the normalized start vector") {
        Graph g = testutil::erdos_renyi(12, 0.3, 3);
        auto r = pagerank(g, make_cfg(0.0));
        for (double v : r.scores) CHECK(v == doctest::Approx(1.0 / 12));
    }
    SUBCASE("scores sum to one") {
        Graph g = testutil::erdos_renyi(40, 0.15, 8);
        auto r = pagerank(g, make_cfg(0.85));
        CHECK(l1_norm(r.scores) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("pagerank matches the dense oracle") {
    Graph g = Graph::from_edges(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {0, 2, 1.0}});
    auto cfg = make_cfg(0.85);
    auto r = pagerank(g, cfg);
    WeightVector oracle = dense_steady_state_oracle(g, cfg, DenseMetric::PageRank);
    CHECK(linf_diff(r.scores, oracle) < 1e-6);
}

TEST_CASE("iterative metrics agree with dense solves on random graphs") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        Graph g = testutil::erdos_renyi(60, 0.08, seed);
        auto pcfg = make_cfg(0.85);
        CHECK(linf_diff(pagerank(g, pcfg).scores,
                        dense_steady_state_oracle(g, pcfg, DenseMetric::PageRank)) < 1e-6);
        auto acfg = make_cfg(0.05);
        CHECK(linf_diff(alpha_centrality(g, acfg).scores,
                        dense_steady_state_oracle(g, acfg, DenseMetric::AlphaCentrality)) < 1e-6);
    }
}

TEST_CASE("alpha centrality basics") {
    SUBCASE("alpha=0 returns s") {
        Graph g = testutil::erdos_renyi(15, 0.2, 5);
        auto cfg = make_cfg(0.0, StartVector::InDegree);
        auto r = alpha_centrality(g, cfg);
        CHECK(linf_diff(r.scores, g.degrees().in_degree) < 1e-12);
    }
    SUBCASE("2-path with uniform s gives (1, 1.5)") {
        Graph g = testutil::directed_path(2);
        auto r = alpha_centrality(g, make_cfg(0.5, StartVector::Uniform));
        CHECK(r.scores[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.scores[1] == doctest::Approx(1.5).epsilon(1e-9));
    }
    SUBCASE("3-cycle with uniform s gives the geometric sum 2 per node") {
        Graph g = testutil::directed_cycle(3);
        auto r = alpha_centrality(g, make_cfg(0.5, StartVector::Uniform));
        for (double v : r.scores) CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("alpha at or above 1/lambda1 is rejected") {
        Graph g = testutil::complete(3); // lambda1 = 2
        CHECK_THROWS_WITH_AS(alpha_centrality(g, make_cfg(0.5, StartVector::Uniform)),
                             doctest::Contains("normalized"), NumericError);
        CHECK_THROWS_AS(alpha_centrality(g, make_cfg(2.0, StartVector::Uniform)), NumericError);
    }
}

TEST_CASE("alpha centrality is linear in s") {
    Graph g = testutil::erdos_renyi(25, 0.15, 12);
    auto base = make_cfg(0.1);
    base.start = StartVector::Custom;

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    WeightVector s1(25), s2(25), s12(25);
    for (std::size_t i = 0; i < 25; ++i) {
        s1[i] = unit(rng);
        s2[i] = unit(rng);
        s12[i] = s1[i] + s2[i];
    }
    auto at = [&](const WeightVector& s) {
        auto cfg = base;
        cfg.custom_start = s;
        return alpha_centrality(g, cfg).scores;
    };
    WeightVector r1 = at(s1), r2 = at(s2), r12 = at(s12);
    for (std::size_t i = 0; i < 25; ++i)
        CHECK(r12[i] == doctest::Approx(r1[i] + r2[i]).epsilon(1e-9));

    // Scaling s leaves the ranking untouched.
    WeightVector s1x(25);
    for (std::size_t i = 0; i < 25; ++i) s1x[i] = 7.25 * s1[i];
    auto cfg1 = base, cfg2 = base;
    cfg1.custom_start = s1;
    cfg2.custom_start = s1x;
    CHECK(alpha_centrality(g, cfg1).ranking == alpha_centrality(g, cfg2).ranking);
}

TEST_CASE("normalized alpha centrality") {
    SUBCASE("alpha=0 is s normalized") {
        Graph g = testutil::out_star(4);
        auto r = normalized_alpha_centrality(g, make_cfg(0.0, StartVector::InDegree));
        // in-degree = (0,1,1,1) -> normalized thirds on the leaves
        CHECK(r.scores[0] == doctest::Approx(0.0));
        for (int v = 1; v < 4; ++v) CHECK(r.scores[v] == doctest::Approx(1.0 / 3));
    }
    SUBCASE("3-cycle symmetry at any valid alpha") {
        Graph g = testutil::directed_cycle(3);
        for (double a : {0.2, 0.5, 2.0}) {
            auto r = normalized_alpha_centrality(g, make_cfg(a, StartVector::Uniform));
            for (double v : r.scores) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-8));
        }
    }
    SUBCASE("above the bound it concentrates on the dominant eigenvector") {
        // Undirected star plus a hub self-loop (aperiodic, so the truncated
        // sum has a single limit direction). lambda solves lambda^2 = lambda+4;
        // the left dominant eigenvector is (1, 1/lambda, ...) normalized.
        std::vector<Edge> edges{{0, 0, 1.0}};
        for (NodeId v = 1; v < 5; ++v) {
            edges.push_back({0, v, 1.0});
            edges.push_back({v, 0, 1.0});
        }
        Graph g = Graph::from_edges(5, std::move(edges));
        const double lambda = (1.0 + std::sqrt(17.0)) / 2.0;
        auto r = normalized_alpha_centrality(g, make_cfg(2.0, StartVector::Uniform));
        CHECK(r.scores[0] == doctest::Approx(1.0 / lambda).epsilon(1e-6));
        for (int v = 1; v < 5; ++v)
            CHECK(r.scores[v] == doctest::Approx(1.0 / (lambda * lambda)).epsilon(1e-6));
    }
    SUBCASE("window around 1/lambda1 is rejected") {
        Graph g = testutil::complete(3); // lambda1 = 2 -> singular at 0.5
        CHECK_THROWS_AS(normalized_alpha_centrality(g, make_cfg(0.5, StartVector::Uniform)),
                        NumericError);
        CHECK_NOTHROW(normalized_alpha_centrality(g, make_cfg(0.6, StartVector::Uniform)));
    }
    SUBCASE("small alpha ranking matches the unnormalized metric") {
        Graph g = testutil::erdos_renyi(30, 0.12, 21);
        auto cfg = make_cfg(0.05);
        CHECK(normalized_alpha_centrality(g, cfg).ranking == alpha_centrality(g, cfg).ranking);
    }
}

TEST_CASE("dense oracle edge cases") {
    SUBCASE("single node, no edges") {
        Graph g = Graph::from_edges(1, {});
        auto cfg = make_cfg(0.3, StartVector::Uniform);
        WeightVector r = dense_steady_state_oracle(g, cfg, DenseMetric::AlphaCentrality);
        CHECK(r[0] == doctest::Approx(1.0));
    }
    SUBCASE("singular system reported") {
        Graph g = testutil::directed_cycle(3); // I - 1.0*A singular at alpha=1
        auto cfg = make_cfg(1.0, StartVector::Uniform);
        CHECK_THROWS_AS(dense_steady_state_oracle(g, cfg, DenseMetric::AlphaCentrality),
                        NumericError);
    }
}

TEST_CASE("ranking permutation is descending with stable ties") {
    auto ranking = rank_by_score({0.5, 2.0, 0.5, 1.0});
    CHECK(ranking == std::vector<NodeId>{1, 3, 0, 2});
}

TEST_CASE("ranking swap fixture separates the two metrics") {
    Graph g = testutil::ranking_swap_fixture();
    const NodeId n1 = *g.index_of("1"), n3 = *g.index_of("3");

    auto pcfg = make_cfg(1.0, StartVector::Uniform);
    pcfg.allow_alpha_one = true;
    auto pr = pagerank(g, pcfg);
    CHECK(pr.scores[n3] > pr.scores[n1]);

    auto acfg = make_cfg(0.5, StartVector::Uniform);
    auto cr = alpha_centrality(g, acfg);
    CHECK(cr.scores[n1] > cr.scores[n3]);
}
