#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netdiff/graph.hpp"
#include "netdiff/vec.hpp"

namespace netdiff {

/// Output of the push-style approximate centrality run.
struct ApproxReport {
    WeightVector scores; ///< approximate centrality vector
    double epsilon = 0.0;
    std::size_t iterations = 0; ///< dequeue count
    double residual_l1_final = 0.0;
    /// True when the sandwich guarantee applies: uniform starting vector and
    /// alpha * d_max < 1. With other starting vectors the algorithm still
    /// runs but the bound is not proven.
    bool bound_applicable = false;
    std::vector<NodeId> ranking;
};

/// Residual-queue approximation of the fixed point cr = s + alpha cr A.
///
/// Threshold epsilon defaults to delta * ||s||_1 / n; each entry of the
/// result then satisfies cr(u) >= scores(u) >= cr(u) * (1 - delta) for
/// uniform s and alpha <= c/d_max, c < 1. A violated runtime precondition
/// only warns through `bound_applicable`; the loop still terminates whenever
/// alpha * lambda1 < 1.
ApproxReport approximate_centrality(const Graph& g, const WeightVector& s, double alpha,
                                    double delta,
                                    std::optional<double> epsilon_override = std::nullopt);

/// Instrumented run checking that the approximate vector always equals the
/// exact centrality of (s - residual), via the dense oracle (node count
/// <= 200). `check_every` = dequeues between checkpoints.
struct InvariantReport {
    double max_violation = 0.0; ///< worst ||cr~ + cr(r) - cr(s)||_inf over checkpoints
    std::size_t checkpoints = 0;
    std::size_t iterations = 0;
};

InvariantReport verify_loop_invariant(const Graph& g, const WeightVector& s, double alpha,
                                      double delta, std::size_t check_every = 1);

/// RMS over nodes of the relative per-node error between the approximate
/// result and power-iteration Alpha-Centrality with the same starting
/// vector. Nodes with exact score zero contribute zero.
double rms_error_vs_exact(const Graph& g, const WeightVector& s, double alpha, double delta,
                          std::optional<double> epsilon_override = std::nullopt);

} // namespace netdiff
