#include "netdiff/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "netdiff/spectral.hpp"

namespace netdiff {

void EpidemicParams::validate(std::size_t node_count) const {
    if (mu < 0.0 || mu > 1.0 || beta < 0.0 || beta > 1.0)
        throw DataError("epidemic params: mu and beta must lie in [0, 1]");
    if (p0.size() != node_count) throw DataError("epidemic params: p0 size mismatch");
    for (double v : p0)
        if (!(v >= 0.0) || v > 1.0)
            throw DataError("epidemic params: p0 entries must lie in [0, 1]");
}

EpidemicTrace sis_deterministic(const Graph& g, const EpidemicParams& params) {
    params.validate(g.node_count());
    const std::size_t n = g.node_count();

    EpidemicTrace trace;
    trace.deterministic.push_back(params.p0);
    WeightVector cur = params.p0;
    for (std::size_t t = 1; t <= params.steps; ++t) {
        // P_t = P_{t-1} ((1-beta) I + mu A)
        WeightVector next(n, 0.0);
        for (NodeId u = 0; u < n; ++u) {
            const double x = cur[u];
            if (x == 0.0) continue;
            next[u] += (1.0 - params.beta) * x;
            const double c = params.mu * x;
            for (const HalfEdge& e : g.out_neighbors(u)) next[e.node] += c * e.weight;
        }
        cur = std::move(next);
        for (double v : cur)
            if (v > 1.0) trace.probabilities_exceed_one = true;
        trace.deterministic.push_back(cur);
    }
    return trace;
}

namespace {

std::vector<std::uint32_t> run_trial(const Graph& g, const EpidemicParams& params,
                                     std::uint64_t seed, std::uint64_t trial) {
    const std::size_t n = g.node_count();
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<char> infected(n, 0);
    for (NodeId u = 0; u < n; ++u)
        if (unit(rng) < params.p0[u]) infected[u] = 1;

    std::vector<std::uint32_t> counts;
    counts.push_back(static_cast<std::uint32_t>(std::count(infected.begin(), infected.end(), 1)));

    std::vector<char> next(n);
    for (std::size_t t = 1; t <= params.steps; ++t) {
        next = infected;
        for (NodeId u = 0; u < n; ++u) {
            if (!infected[u]) continue;
            for (const HalfEdge& e : g.out_neighbors(u)) {
                const double p = std::min(1.0, params.mu * e.weight);
                if (!next[e.node] && unit(rng) < p) next[e.node] = 1;
            }
        }
        // Cure after infection within the same step; same-step infections
        // are eligible for curing too.
        for (NodeId u = 0; u < n; ++u)
            if (next[u] && unit(rng) < params.beta) next[u] = 0;
        infected.swap(next);
        counts.push_back(
            static_cast<std::uint32_t>(std::count(infected.begin(), infected.end(), 1)));
    }
    return counts;
}

} // namespace

EpidemicTrace sis_montecarlo(const Graph& g, const EpidemicParams& params, std::size_t trials,
                             std::uint64_t seed, std::size_t threads) {
    params.validate(g.node_count());
    if (trials == 0) throw DataError("sis_montecarlo: trials must be >= 1");

    EpidemicTrace trace;
    trace.trials = trials;
    trace.infected_counts.resize(trials);

    if (threads <= 1) {
        for (std::size_t k = 0; k < trials; ++k)
            trace.infected_counts[k] = run_trial(g, params, seed, k);
    } else {
        // Per-trial seeds make the result independent of scheduling.
        std::vector<std::thread> pool;
        std::size_t nthreads = std::min(threads, trials);
        for (std::size_t w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < trials; k += nthreads)
                    trace.infected_counts[k] = run_trial(g, params, seed, k);
            });
        }
        for (auto& th : pool) th.join();
    }

    double mean_final = 0.0;
    for (const auto& counts : trace.infected_counts) mean_final += counts.back();
    mean_final /= static_cast<double>(trials);
    const double n = static_cast<double>(g.node_count());
    if (mean_final < 1.0)
        trace.classification = EpidemicClassification::DiedOut;
    else if (mean_final > 0.05 * n)
        trace.classification = EpidemicClassification::Persisted;
    else
        trace.classification = EpidemicClassification::Indeterminate;
    return trace;
}

ThresholdTable threshold_experiment(const Graph& g, const std::vector<double>& ratios,
                                    double beta, std::size_t trials, std::size_t horizon,
                                    std::uint64_t seed, std::size_t threads) {
    if (beta <= 0.0 || beta > 1.0)
        throw DataError("threshold_experiment: beta must lie in (0, 1]");
    for (double r : ratios)
        if (r < 0.0) throw DataError("threshold_experiment: ratios must be non-negative");

    ThresholdTable table;
    table.tau = epidemic_threshold(g);
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        EpidemicParams params;
        params.beta = beta;
        params.mu = ratios[i] * beta;
        if (params.mu > 1.0)
            throw DataError("threshold_experiment: ratio * beta exceeds 1, lower beta");
        params.p0.assign(g.node_count(), 1.0);
        params.steps = horizon;
        EpidemicTrace trace = sis_montecarlo(g, params, trials, seed + i, threads);

        double mean_final = 0.0;
        for (const auto& counts : trace.infected_counts) mean_final += counts.back();
        mean_final /= static_cast<double>(trials);

        table.rows.push_back(
            {ratios[i], params.mu, beta, mean_final, trace.classification});
    }
    return table;
}

} // namespace netdiff
