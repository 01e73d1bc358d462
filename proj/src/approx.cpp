#include "netdiff/approx.hpp"

#include <cmath>
#include <deque>
#include <functional>

#include "netdiff/centrality.hpp"
#include "netdiff/spectral.hpp"

namespace netdiff {

namespace {

struct PushState {
    WeightVector approx;
    WeightVector residual;
    std::size_t iterations = 0;
};

// Core residual-push loop. `checkpoint` (when set) is invoked before the
// loop and then after every `check_every` dequeues and once at the end.
PushState run_push(const Graph& g, const WeightVector& s, double alpha, double epsilon,
                   std::size_t check_every,
                   const std::function<void(const PushState&)>& checkpoint) {
    const std::size_t n = g.node_count();
    PushState st;
    st.approx.assign(n, 0.0);
    st.residual = s;

    std::deque<NodeId> queue;
    std::vector<char> queued(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        if (st.residual[u] > epsilon) {
            queue.push_back(u);
            queued[u] = 1;
        }
    }

    if (checkpoint) checkpoint(st);
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        queued[u] = 0;

        st.approx[u] += st.residual[u];
        const double t = alpha * st.residual[u];
        st.residual[u] = 0.0;
        for (const HalfEdge& e : g.out_neighbors(u)) {
            st.residual[e.node] += t * e.weight;
            if (!queued[e.node] && st.residual[e.node] > epsilon) {
                queue.push_back(e.node);
                queued[e.node] = 1;
            }
        }
        ++st.iterations;
        if (checkpoint && st.iterations % check_every == 0) checkpoint(st);
    }
    if (checkpoint) checkpoint(st);
    return st;
}

double resolve_epsilon(const WeightVector& s, double delta,
                       std::optional<double> epsilon_override) {
    if (epsilon_override) {
        if (!(*epsilon_override > 0.0)) throw DataError("epsilon override must be positive");
        return *epsilon_override;
    }
    return delta * l1_norm(s) / static_cast<double>(s.size());
}

void validate_inputs(const Graph& g, const WeightVector& s, double alpha, double delta) {
    if (g.node_count() == 0) throw DataError("approximate_centrality: empty graph");
    if (s.size() != g.node_count())
        throw DataError("approximate_centrality: start vector size mismatch");
    check_weight_vector(s, "approximate_centrality start vector");
    if (!(delta > 0.0) || delta > 1.0)
        throw DataError("approximate_centrality: delta must lie in (0, 1]");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DataError("approximate_centrality: alpha must be a non-negative finite real");
}

bool is_uniform(const WeightVector& s) {
    for (double v : s)
        if (std::abs(v - s[0]) > 1e-12 * std::max(1.0, std::abs(s[0]))) return false;
    return true;
}

} // namespace

ApproxReport approximate_centrality(const Graph& g, const WeightVector& s, double alpha,
                                    double delta, std::optional<double> epsilon_override) {
    validate_inputs(g, s, alpha, delta);
    const double epsilon = resolve_epsilon(s, delta, epsilon_override);

    ApproxReport rep;
    rep.epsilon = epsilon;
    rep.bound_applicable = is_uniform(s) && alpha * g.degrees().d_max < 1.0;

    PushState st = run_push(g, s, alpha, epsilon, 0, nullptr);
    rep.scores = std::move(st.approx);
    rep.iterations = st.iterations;
    rep.residual_l1_final = l1_norm(st.residual);
    rep.ranking = rank_by_score(rep.scores);
    return rep;
}

InvariantReport verify_loop_invariant(const Graph& g, const WeightVector& s, double alpha,
                                      double delta, std::size_t check_every) {
    validate_inputs(g, s, alpha, delta);
    if (g.node_count() > 200)
        throw DataError("verify_loop_invariant: graph too large for the dense oracle");
    if (check_every == 0) check_every = 1;
    const double epsilon = resolve_epsilon(s, delta, std::nullopt);

    CentralityConfig oracle_cfg;
    oracle_cfg.alpha = alpha;
    oracle_cfg.start = StartVector::Custom;
    oracle_cfg.custom_start = s;
    const WeightVector cr_s = dense_steady_state_oracle(g, oracle_cfg, DenseMetric::AlphaCentrality);

    InvariantReport rep;
    auto checkpoint = [&](const PushState& st) {
        CentralityConfig c = oracle_cfg;
        c.custom_start = st.residual;
        const WeightVector cr_r = dense_steady_state_oracle(g, c, DenseMetric::AlphaCentrality);
        double viol = 0.0;
        for (std::size_t i = 0; i < cr_s.size(); ++i)
            viol = std::max(viol, std::abs(st.approx[i] + cr_r[i] - cr_s[i]));
        rep.max_violation = std::max(rep.max_violation, viol);
        ++rep.checkpoints;
        rep.iterations = st.iterations;
    };
    run_push(g, s, alpha, epsilon, check_every, checkpoint);
    return rep;
}

double rms_error_vs_exact(const Graph& g, const WeightVector& s, double alpha, double delta,
                          std::optional<double> epsilon_override) {
    validate_inputs(g, s, alpha, delta);

    CentralityConfig cfg;
    cfg.alpha = alpha;
    cfg.start = StartVector::Custom;
    cfg.custom_start = s;
    cfg.tol = 1e-12;
    const CentralityResult exact = alpha_centrality(g, cfg); // throws above the bound

    const ApproxReport approx = approximate_centrality(g, s, alpha, delta, epsilon_override);

    double acc = 0.0;
    const std::size_t n = g.node_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (exact.scores[i] <= 0.0) continue;
        const double rel = (exact.scores[i] - approx.scores[i]) / exact.scores[i];
        acc += rel * rel;
    }
    return std::sqrt(acc / static_cast<double>(n));
}

} // namespace netdiff
