#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "netdiff/diffusion.hpp"
#include "netdiff/graph.hpp"
#include "netdiff/vec.hpp"

namespace netdiff {

enum class StartVector {
    Default, ///< uniform for PageRank, in-degree for (normalized) Alpha-Centrality
    Uniform,
    InDegree,
    Custom,
};

struct CentralityConfig {
    double alpha = 0.85; ///< damping factor (PageRank) or attenuation factor
    StartVector start = StartVector::Default;
    WeightVector custom_start;
    std::size_t max_iterations = 10000;
    double tol = 1e-9; ///< L1 change per iteration
    DanglingPolicy dangling = DanglingPolicy::Sink;
    bool allow_alpha_one = false; ///< PageRank only: pure power iteration, no guarantee
};

struct CentralityResult {
    WeightVector scores;
    std::size_t iterations_used = 0;
    double final_residual = 0.0;
    bool converged = false;
    /// Node indices by descending score, ties broken by ascending index.
    std::vector<NodeId> ranking;
    double alpha = 0.0;
};

/// Ranking permutation: descending score, stable tie-break by node index.
std::vector<NodeId> rank_by_score(const WeightVector& scores);

/// Steady state of conservative diffusion with restart:
/// pr = (1-alpha) s + alpha pr W, W = D^-1 A. s is normalized to L1 = 1.
CentralityResult pagerank(const Graph& g, const CentralityConfig& cfg);

/// Steady state of non-conservative diffusion: cr = s + alpha cr A.
/// Rejects alpha at or above the 1/lambda1 bound (margin 0.001) with a
/// message pointing at normalized Alpha-Centrality.
CentralityResult alpha_centrality(const Graph& g, const CentralityConfig& cfg);

/// cr(t)/||cr(t)||_1 with per-step renormalization against overflow;
/// defined for all alpha >= 0 except a small window around 1/lambda1.
CentralityResult normalized_alpha_centrality(const Graph& g, const CentralityConfig& cfg);

enum class DenseMetric { PageRank, AlphaCentrality };

/// Exact steady state via a dense linear solve, for graphs up to 200 nodes.
/// Test-scale ground truth for the iterative paths.
WeightVector dense_steady_state_oracle(const Graph& g, const CentralityConfig& cfg,
                                       DenseMetric metric);

/// Resolve the starting vector of cfg for the given metric (uniform default
/// for PageRank, in-degree for the centrality family). Not normalized.
WeightVector resolve_start_vector(const Graph& g, const CentralityConfig& cfg,
                                  bool pagerank_default);

/// TSV export: node_label <TAB> score <TAB> rank.
void write_scores_tsv(std::ostream& out, const Graph& g, const CentralityResult& r);
/// JSON export with scores and convergence metadata.
std::string scores_json(const Graph& g, const CentralityResult& r);

} // namespace netdiff
