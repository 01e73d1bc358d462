#include "netdiff/diffusion.hpp"

#include <cmath>
#include <ostream>

namespace netdiff {

void DiffusionConfig::validate() const {
    if (!std::isfinite(alpha) || !std::isfinite(delta_self))
        throw DataError("diffusion config: alpha and delta_self must be finite");
    if (delta_self < 0.0 || delta_self > 1.0)
        throw DataError("diffusion config: delta_self must lie in [0, 1]");
    if (mode == DiffusionMode::Conservative) {
        if (alpha < 0.0 || alpha > 1.0)
            throw DataError("diffusion config: conservative mode requires 0 <= alpha <= 1");
    } else {
        if (alpha < 0.0) throw DataError("diffusion config: alpha must be non-negative");
        // Wn = (delta/alpha) I + A is undefined at alpha = 0.
        if (delta_self > 0.0 && alpha == 0.0)
            throw DataError("diffusion config: non-conservative delta_self > 0 requires alpha > 0");
    }
}

WeightVector conservative_step(const Graph& g, const WeightVector& received,
                               const DiffusionConfig& cfg) {
    if (cfg.mode != DiffusionMode::Conservative)
        throw DataError("conservative_step: config mode is not conservative");
    cfg.validate();
    const std::size_t n = g.node_count();
    if (received.size() != n) throw DataError("conservative_step: vector size mismatch");

    const double a = cfg.alpha;
    const double d = cfg.delta_self;
    const auto& deg = g.degrees().out_degree;

    WeightVector out(n, 0.0);
    double uniform_mass = 0.0;
    for (NodeId u = 0; u < n; ++u) {
        const double xu = received[u];
        if (xu == 0.0) continue;
        if (deg[u] == 0.0) {
            switch (cfg.dangling) {
            case DanglingPolicy::Error:
                throw NumericError("conservative_step: mass on zero-out-degree node " +
                                   g.label_of(u));
            case DanglingPolicy::Sink:
                out[u] += a * xu;
                break;
            case DanglingPolicy::UniformRedistribute:
                out[u] += a * d * xu;
                uniform_mass += a * (1.0 - d) * xu;
                break;
            }
            continue;
        }
        out[u] += a * d * xu;
        const double c = a * (1.0 - d) * xu / deg[u];
        for (const HalfEdge& e : g.out_neighbors(u)) out[e.node] += c * e.weight;
    }
    if (uniform_mass > 0.0) {
        const double share = uniform_mass / static_cast<double>(n);
        for (double& v : out) v += share;
    }
    return out;
}

WeightVector nonconservative_step(const Graph& g, const WeightVector& received,
                                  const DiffusionConfig& cfg) {
    if (cfg.mode != DiffusionMode::NonConservative)
        throw DataError("nonconservative_step: config mode is not non-conservative");
    cfg.validate();
    const std::size_t n = g.node_count();
    if (received.size() != n) throw DataError("nonconservative_step: vector size mismatch");

    // alpha * x * ((delta/alpha) I + A) = delta * x + alpha * x * A
    WeightVector out(n, 0.0);
    const double a = cfg.alpha;
    const double d = cfg.delta_self;
    for (NodeId u = 0; u < n; ++u) {
        const double xu = received[u];
        if (xu == 0.0) continue;
        out[u] += d * xu;
        const double c = a * xu;
        for (const HalfEdge& e : g.out_neighbors(u)) out[e.node] += c * e.weight;
    }
    return out;
}

DiffusionTrajectory run_conservative(const Graph& g, const WeightVector& initial,
                                     const DiffusionConfig& cfg, std::size_t steps) {
    cfg.validate();
    check_weight_vector(initial, "run_conservative initial");
    DiffusionTrajectory traj;
    traj.steps = steps;
    traj.received.push_back(initial);
    traj.total.push_back(initial);
    const std::size_t n = g.node_count();
    for (std::size_t t = 1; t <= steps; ++t) {
        traj.received.push_back(conservative_step(g, traj.received.back(), cfg));
        WeightVector next = conservative_step(g, traj.total.back(), cfg);
        for (std::size_t i = 0; i < n; ++i) next[i] += (1.0 - cfg.alpha) * initial[i];
        traj.total.push_back(std::move(next));
    }
    return traj;
}

DiffusionTrajectory run_nonconservative(const Graph& g, const WeightVector& initial,
                                        const DiffusionConfig& cfg, std::size_t steps) {
    cfg.validate();
    check_weight_vector(initial, "run_nonconservative initial");
    DiffusionTrajectory traj;
    traj.steps = steps;
    traj.received.push_back(initial);
    traj.total.push_back(initial);
    const std::size_t n = g.node_count();
    for (std::size_t t = 1; t <= steps; ++t) {
        traj.received.push_back(nonconservative_step(g, traj.received.back(), cfg));
        WeightVector next = traj.total.back();
        const WeightVector& delta = traj.received.back();
        for (std::size_t i = 0; i < n; ++i) next[i] += delta[i];
        traj.total.push_back(std::move(next));
    }
    return traj;
}

void write_trajectory_csv(std::ostream& out, const DiffusionTrajectory& traj, bool per_node) {
    out.precision(17);
    out << "step,l1_norm";
    if (per_node && !traj.total.empty())
        for (std::size_t i = 0; i < traj.total[0].size(); ++i) out << ",node_" << i;
    out << '\n';
    for (std::size_t t = 0; t < traj.total.size(); ++t) {
        out << t << ',' << l1_norm(traj.total[t]);
        if (per_node)
            for (double v : traj.total[t]) out << ',' << v;
        out << '\n';
    }
}

} // namespace netdiff
