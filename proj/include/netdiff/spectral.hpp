#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "netdiff/graph.hpp"
#include "netdiff/vec.hpp"

namespace netdiff {

/// Power-iteration estimate of the adjacency matrix's spectral radius.
struct SpectralEstimate {
    double lambda1 = 0.0;
    std::size_t iterations = 0;
    double rel_change_final = 0.0;
    /// False when the iterate direction keeps rotating (e.g. a complex
    /// dominant pair on a directed cycle); lambda1 is then the averaged
    /// growth-rate estimate and should be treated as weaker.
    bool converged = false;
};

SpectralEstimate spectral_radius(const Graph& g, double tol = 1e-10,
                                 std::size_t max_iters = 10000);

/// Epidemic threshold tau = 1 / lambda1. Acyclic graphs (lambda1 = 0) get
/// +infinity.
double epidemic_threshold(const Graph& g);

/// Attenuated path-count series S(alpha,t) = sum_k (alpha A)^k, reported as
/// the entry sum ||S||_1 per step plus the expected path length
/// L(alpha,t) = sum k a^k ||A^k||_1 / sum a^k ||A^k||_1. Computed by vector
/// recurrences in log space, never via matrix powers.
struct PathSeriesReport {
    double alpha = 0.0;
    std::size_t t_max = 0;
    std::vector<double> series_l1;            ///< ||S(alpha,k)||_1; +inf once overflowed
    std::vector<double> expected_path_length; ///< L(alpha,k)
    bool diverging = false;                   ///< per-step terms still growing at t_max
};

PathSeriesReport path_series(const Graph& g, double alpha, std::size_t t_max);

/// Closed-form approximation 1/(1 - alpha*lambda1) of the expected path
/// length for alpha below threshold; `diverges` is set above it.
struct PathLengthAsymptotic {
    double value = 0.0;
    bool diverges = false;
};

PathLengthAsymptotic expected_path_length_asymptotic(const Graph& g, double alpha);

inline constexpr double kInfiniteThreshold = std::numeric_limits<double>::infinity();

} // namespace netdiff
