#include "netdiff/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "netdiff/spectral.hpp"

namespace netdiff {

namespace {

// Margin on the alpha * lambda1 < 1 precondition: the power-method estimate
// carries error and the series converges arbitrarily slowly near the bound.
constexpr double kSpectralMargin = 0.999;

// Exclusion window around 1/lambda1 where normalized Alpha-Centrality is
// undefined, relative to 1/lambda1.
constexpr double kSingularWindow = 1e-3;

} // namespace

std::vector<NodeId> rank_by_score(const WeightVector& scores) {
    std::vector<NodeId> order(scores.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return scores[a] > scores[b];
    });
    return order;
}

WeightVector resolve_start_vector(const Graph& g, const CentralityConfig& cfg,
                                  bool pagerank_default) {
    const std::size_t n = g.node_count();
    StartVector sv = cfg.start;
    if (sv == StartVector::Default)
        sv = pagerank_default ? StartVector::Uniform : StartVector::InDegree;
    switch (sv) {
    case StartVector::Uniform:
        return WeightVector(n, 1.0);
    case StartVector::InDegree:
        return g.degrees().in_degree;
    case StartVector::Custom:
        if (cfg.custom_start.size() != n)
            throw DataError("custom start vector size does not match node count");
        check_weight_vector(cfg.custom_start, "start vector");
        return cfg.custom_start;
    default:
        throw DataError("unresolved start vector");
    }
}

CentralityResult pagerank(const Graph& g, const CentralityConfig& cfg) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("pagerank: empty graph");
    if (cfg.alpha < 0.0 || cfg.alpha > 1.0 || (cfg.alpha == 1.0 && !cfg.allow_alpha_one))
        throw NumericError("pagerank: alpha must lie in [0, 1); alpha = 1 needs the explicit "
                           "power-iteration override");

    WeightVector s = resolve_start_vector(g, cfg, /*pagerank_default=*/true);
    const double sn = l1_norm(s);
    if (sn == 0.0) throw DataError("pagerank: start vector is all zero");
    for (double& v : s) v /= sn;

    DiffusionConfig step_cfg{cfg.alpha, 0.0, DiffusionMode::Conservative, cfg.dangling};

    CentralityResult res;
    res.alpha = cfg.alpha;
    res.scores = s;
    for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
        WeightVector next = conservative_step(g, res.scores, step_cfg);
        if (cfg.alpha < 1.0)
            for (std::size_t i = 0; i < n; ++i) next[i] += (1.0 - cfg.alpha) * s[i];
        res.final_residual = l1_diff(next, res.scores);
        res.scores = std::move(next);
        res.iterations_used = it;
        if (res.final_residual < cfg.tol) {
            res.converged = true;
            break;
        }
    }
    res.ranking = rank_by_score(res.scores);
    return res;
}

namespace {

double checked_attenuation(const Graph& g, double alpha, const char* who) {
    if (alpha < 0.0) throw NumericError(std::string(who) + ": alpha must be non-negative");
    const double lambda = spectral_radius(g).lambda1;
    if (alpha * lambda > kSpectralMargin)
        throw NumericError(std::string(who) + ": alpha * lambda1 = " +
                           std::to_string(alpha * lambda) +
                           " is at or above the 1/lambda1 convergence bound; use normalized "
                           "Alpha-Centrality instead");
    return lambda;
}

} // namespace

CentralityResult alpha_centrality(const Graph& g, const CentralityConfig& cfg) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("alpha_centrality: empty graph");
    checked_attenuation(g, cfg.alpha, "alpha_centrality");

    const WeightVector s = resolve_start_vector(g, cfg, /*pagerank_default=*/false);
    DiffusionConfig step_cfg{cfg.alpha, 0.0, DiffusionMode::NonConservative,
                             DanglingPolicy::Sink};

    CentralityResult res;
    res.alpha = cfg.alpha;
    res.scores = s;
    for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
        WeightVector next = nonconservative_step(g, res.scores, step_cfg);
        for (std::size_t i = 0; i < n; ++i) next[i] += s[i];
        res.final_residual = l1_diff(next, res.scores);
        res.scores = std::move(next);
        res.iterations_used = it;
        if (res.final_residual < cfg.tol) {
            res.converged = true;
            break;
        }
    }
    res.ranking = rank_by_score(res.scores);
    return res;
}

CentralityResult normalized_alpha_centrality(const Graph& g, const CentralityConfig& cfg) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("normalized_alpha_centrality: empty graph");
    if (cfg.alpha < 0.0)
        throw NumericError("normalized_alpha_centrality: alpha must be non-negative");
    const double lambda = spectral_radius(g).lambda1;
    if (lambda > 0.0 && std::abs(cfg.alpha * lambda - 1.0) <= kSingularWindow)
        throw NumericError("normalized_alpha_centrality: alpha within the exclusion window "
                           "around 1/lambda1, metric undefined there");

    const WeightVector s = resolve_start_vector(g, cfg, /*pagerank_default=*/false);
    if (l1_norm(s) == 0.0)
        throw DataError("normalized_alpha_centrality: start vector is all zero");

    // Truncated-sum form: acc(t) = sum_{k<=t} s (alpha A)^k, renormalized
    // when the accumulator threatens overflow. Only the direction matters.
    WeightVector acc = s, term = s;
    CentralityResult res;
    res.alpha = cfg.alpha;
    res.scores = acc;
    double prev_norm = l1_norm(acc);
    WeightVector prev_ncr = acc;
    for (double& v : prev_ncr) v /= prev_norm;

    DiffusionConfig step_cfg{cfg.alpha, 0.0, DiffusionMode::NonConservative,
                             DanglingPolicy::Sink};
    for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
        term = nonconservative_step(g, term, step_cfg);
        for (std::size_t i = 0; i < n; ++i) acc[i] += term[i];
        const double norm = l1_norm(acc);
        WeightVector ncr = acc;
        for (double& v : ncr) v /= norm;
        res.final_residual = l1_diff(ncr, prev_ncr);
        res.iterations_used = it;
        if (norm > 1e100) {
            for (double& v : acc) v /= norm;
            for (double& v : term) v /= norm;
        }
        prev_ncr = ncr;
        res.scores = std::move(ncr);
        if (res.final_residual < cfg.tol) {
            res.converged = true;
            break;
        }
    }
    res.ranking = rank_by_score(res.scores);
    return res;
}

WeightVector dense_steady_state_oracle(const Graph& g, const CentralityConfig& cfg,
                                       DenseMetric metric) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("dense oracle: empty graph");
    if (n > 200) throw DataError("dense oracle: graph too large (limit 200 nodes)");

    const bool is_pr = metric == DenseMetric::PageRank;
    WeightVector s = resolve_start_vector(g, cfg, is_pr);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    const auto& deg = g.degrees().out_degree;
    for (NodeId u = 0; u < n; ++u) {
        if (is_pr) {
            if (deg[u] == 0.0) {
                switch (cfg.dangling) {
                case DanglingPolicy::Error:
                    throw NumericError("dense oracle: dangling node under error policy");
                case DanglingPolicy::Sink:
                    M(u, u) = 1.0;
                    break;
                case DanglingPolicy::UniformRedistribute:
                    for (std::size_t v = 0; v < n; ++v)
                        M(u, static_cast<Eigen::Index>(v)) = 1.0 / static_cast<double>(n);
                    break;
                }
                continue;
            }
            for (const HalfEdge& e : g.out_neighbors(u)) M(u, e.node) = e.weight / deg[u];
        } else {
            for (const HalfEdge& e : g.out_neighbors(u)) M(u, e.node) = e.weight;
        }
    }

    Eigen::VectorXd b(static_cast<Eigen::Index>(n));
    if (is_pr) {
        const double sn = l1_norm(s);
        if (sn == 0.0) throw DataError("dense oracle: start vector is all zero");
        for (std::size_t i = 0; i < n; ++i) b(static_cast<Eigen::Index>(i)) =
            (1.0 - cfg.alpha) * s[i] / sn;
    } else {
        for (std::size_t i = 0; i < n; ++i) b(static_cast<Eigen::Index>(i)) = s[i];
    }

    // Row-vector fixed point x = b + alpha x M, solved as (I - alpha M)^T x^T = b^T.
    Eigen::MatrixXd sys =
        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) -
        cfg.alpha * M.transpose();
    Eigen::VectorXd x = sys.partialPivLu().solve(b);
    const double resid = (sys * x - b).lpNorm<Eigen::Infinity>();
    if (!x.allFinite() || resid > 1e-6 * std::max(1.0, b.lpNorm<Eigen::Infinity>()))
        throw NumericError("dense oracle: system is singular at this alpha");

    WeightVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x(static_cast<Eigen::Index>(i));
    return out;
}

void write_scores_tsv(std::ostream& out, const Graph& g, const CentralityResult& r) {
    out.precision(17);
    std::vector<std::size_t> rank_of(r.scores.size());
    for (std::size_t pos = 0; pos < r.ranking.size(); ++pos) rank_of[r.ranking[pos]] = pos + 1;
    for (NodeId u = 0; u < r.scores.size(); ++u)
        out << g.label_of(u) << '\t' << r.scores[u] << '\t' << rank_of[u] << '\n';
}

std::string scores_json(const Graph& g, const CentralityResult& r) {
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["iterations"] = r.iterations_used;
    j["final_residual"] = r.final_residual;
    j["converged"] = r.converged;
    nlohmann::json scores = nlohmann::json::object();
    for (NodeId u = 0; u < r.scores.size(); ++u) scores[g.label_of(u)] = r.scores[u];
    j["scores"] = std::move(scores);
    return j.dump(2);
}

} // namespace netdiff
