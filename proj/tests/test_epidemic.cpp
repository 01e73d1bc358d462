#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "netdiff/diffusion.hpp"
#include "netdiff/epidemic.hpp"
#include "test_util.hpp"

using namespace netdiff;

namespace {

EpidemicParams params(double mu, double beta, WeightVector p0, std::size_t steps) {
    EpidemicParams p;
    p.mu = mu;
    p.beta = beta;
    p.p0 = std::move(p0);
    p.steps = steps;
    return p;
}

} // namespace

TEST_CASE("parameter validation") {
    Graph g = testutil::complete(3);
    CHECK_THROWS_AS(sis_deterministic(g, params(1.5, 0.1, WeightVector(3, 0.1), 5)), DataError);
    CHECK_THROWS_AS(sis_deterministic(g, params(0.1, -0.1, WeightVector(3, 0.1), 5)), DataError);
    CHECK_THROWS_AS(sis_deterministic(g, params(0.1, 0.1, WeightVector(3, 1.5), 5)), DataError);
    CHECK_THROWS_AS(sis_deterministic(g, params(0.1, 0.1, WeightVector(2, 0.1), 5)), DataError);
}

TEST_CASE("deterministic recurrence trivial cases") {
    Graph g = testutil::complete(3);
    SUBCASE("instant cure, no spread") {
        auto tr = sis_deterministic(g, params(0.0, 1.0, WeightVector(3, 1.0), 3));
        for (std::size_t t = 1; t <= 3; ++t)
            for (double v : tr.deterministic[t]) CHECK(v == 0.0);
    }
    SUBCASE("identity recurrence") {
        auto tr = sis_deterministic(g, params(0.0, 0.0, {0.3, 0.7, 0.1}, 4));
        for (const auto& p : tr.deterministic) {
            CHECK(p[0] == doctest::Approx(0.3));
            CHECK(p[1] == doctest::Approx(0.7));
            CHECK(p[2] == doctest::Approx(0.1));
        }
    }
}

TEST_CASE("deterministic recurrence matches a dense 2-step oracle on K3") {
    Graph g = testutil::complete(3);
    auto tr = sis_deterministic(g, params(0.3, 0.5, {0.1, 0, 0}, 2));
    // M = (1-beta) I + mu A, evaluated densely
    auto adj = testutil::dense_adjacency(g);
    std::vector<std::vector<double>> m(3, std::vector<double>(3, 0.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = (i == j ? 0.5 : 0.0) + 0.3 * adj[i][j];
    auto p1 = testutil::dense_left_multiply({0.1, 0, 0}, m);
    auto p2 = testutil::dense_left_multiply(p1, m);
    CHECK(linf_diff(tr.deterministic[1], p1) < 1e-15);
    CHECK(linf_diff(tr.deterministic[2], p2) < 1e-15);
}

TEST_CASE("probabilities above one are flagged, not clamped") {
    Graph g = testutil::complete(4);
    auto tr = sis_deterministic(g, params(1.0, 0.0, WeightVector(4, 1.0), 3));
    CHECK(tr.probabilities_exceed_one);
    CHECK(tr.deterministic[1][0] == doctest::Approx(4.0)); // 1 + 3 neighbors
}

TEST_CASE("deterministic trace equals nonconservative diffusion received vectors") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = testutil::erdos_renyi(25, 0.15, 1000 + rep);
        const double mu = 0.05 + 0.9 * unit(rng);
        const double beta = unit(rng);
        WeightVector p0(25);
        for (double& v : p0) v = unit(rng);

        auto tr = sis_deterministic(g, params(mu, beta, p0, 15));
        DiffusionConfig cfg;
        cfg.mode = DiffusionMode::NonConservative;
        cfg.alpha = mu;
        cfg.delta_self = 1.0 - beta;
        auto traj = run_nonconservative(g, p0, cfg, 15);
        for (std::size_t t = 0; t <= 15; ++t)
            CHECK(linf_diff(tr.deterministic[t], traj.received[t]) < 1e-12);
    }
}

TEST_CASE("deterministic growth rate approaches (1-beta) + mu*lambda1") {
    Graph g = testutil::complete(4); // lambda1 = 3
    auto tr = sis_deterministic(g, params(0.2, 0.3, WeightVector(4, 0.01), 100));
    const double rate = l1_norm(tr.deterministic[100]) / l1_norm(tr.deterministic[99]);
    CHECK(rate == doctest::Approx(0.7 + 0.2 * 3.0).epsilon(0.01));
}

TEST_CASE("monte carlo trivial cases") {
    Graph g = testutil::complete(3);
    SUBCASE("mu=0 beta=1 kills everything at t=1") {
        auto tr = sis_montecarlo(g, params(0.0, 1.0, WeightVector(3, 1.0), 3), 20, 5);
        for (const auto& counts : tr.infected_counts) {
            CHECK(counts[0] == 3);
            for (std::size_t t = 1; t < counts.size(); ++t) CHECK(counts[t] == 0);
        }
        CHECK(tr.classification == EpidemicClassification::DiedOut);
    }
    SUBCASE("certain transmission from one seed covers K3 at t=1") {
        auto tr = sis_montecarlo(g, params(1.0, 0.0, {1, 0, 0}, 2), 20, 5);
        for (const auto& counts : tr.infected_counts) {
            CHECK(counts[1] == 3);
            CHECK(counts[2] == 3);
        }
        CHECK(tr.classification == EpidemicClassification::Persisted);
    }
}

TEST_CASE("monte carlo is reproducible and thread-count independent") {
    Graph g = testutil::erdos_renyi(30, 0.15, 4);
    auto p = params(0.3, 0.4, WeightVector(30, 0.5), 30);
    auto a = sis_montecarlo(g, p, 40, 123);
    auto b = sis_montecarlo(g, p, 40, 123);
    CHECK(a.infected_counts == b.infected_counts);
    auto c = sis_montecarlo(g, p, 40, 123, 4);
    CHECK(a.infected_counts == c.infected_counts);
    auto d = sis_montecarlo(g, p, 40, 124);
    CHECK(a.infected_counts != d.infected_counts);
}

TEST_CASE("mean infections grow with mu under paired seeds") {
    Graph g = testutil::erdos_renyi(40, 0.1, 8);
    auto mean_final = [&](double mu) {
        auto tr = sis_montecarlo(g, params(mu, 0.3, WeightVector(40, 0.5), 40), 200, 999);
        double m = 0;
        for (const auto& c : tr.infected_counts) m += c.back();
        return m / 200.0;
    };
    const double lo = mean_final(0.05), mid = mean_final(0.3), hi = mean_final(0.8);
    CHECK(lo <= mid + 0.5);
    CHECK(mid <= hi + 0.5);
    CHECK(lo < hi);
}

TEST_CASE("infection never leaves a disconnected seed's component") {
    // two disjoint 3-cycles; seed only in the first
    std::vector<Edge> edges;
    for (NodeId u = 0; u < 3; ++u) edges.push_back({u, static_cast<NodeId>((u + 1) % 3), 1.0});
    for (NodeId u = 3; u < 6; ++u)
        edges.push_back({u, static_cast<NodeId>(3 + (u - 3 + 1) % 3), 1.0});
    Graph g = Graph::from_edges(6, std::move(edges));
    WeightVector p0{1, 1, 1, 0, 0, 0};
    auto tr = sis_montecarlo(g, params(0.9, 0.0, p0, 20), 25, 3);
    for (const auto& counts : tr.infected_counts)
        for (auto v : counts) CHECK(v <= 3);
}

TEST_CASE("threshold experiment classifies around tau") {
    // Small beta keeps the per-step full-extinction probability negligible on
    // a 3-node graph, so the supercritical ratio actually persists.
    Graph g = testutil::complete(3); // tau = 0.5
    auto table = threshold_experiment(g, {0.0, 0.1, 2.0}, 0.02, 500, 200, 42);
    CHECK(table.tau == doctest::Approx(0.5).epsilon(1e-6));
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0].classification == EpidemicClassification::DiedOut); // mu = 0
    CHECK(table.rows[1].classification == EpidemicClassification::DiedOut);
    CHECK(table.rows[2].classification == EpidemicClassification::Persisted);
    CHECK_THROWS_AS(threshold_experiment(g, {100.0}, 0.5, 10, 10, 1), DataError);
}
