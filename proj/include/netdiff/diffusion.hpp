#pragma once

#include <cstddef>
#include <iosfwd>

#include "netdiff/graph.hpp"
#include "netdiff/vec.hpp"

namespace netdiff {

enum class DiffusionMode { Conservative, NonConservative };

/// What to do with mass sitting on a node with zero out-degree in
/// conservative mode (the transfer matrix row is undefined there).
enum class DanglingPolicy { Error, Sink, UniformRedistribute };

struct DiffusionConfig {
    double alpha = 0.5;
    double delta_self = 0.0; ///< self-retention portion of the transfer/replication matrix
    DiffusionMode mode = DiffusionMode::Conservative;
    DanglingPolicy dangling = DanglingPolicy::Sink;

    /// Throws DataError when the (alpha, delta_self, mode) combination is
    /// outside the defined range.
    void validate() const;
};

/// One conservative step: alpha * received * Wc with
/// Wc = delta*I + (1-delta) * D^-1 * A. Dangling rows follow cfg.dangling;
/// `Sink` keeps the redistributable portion at the node so total mass is
/// preserved.
WeightVector conservative_step(const Graph& g, const WeightVector& received,
                               const DiffusionConfig& cfg);

/// One non-conservative step: alpha * received * Wn with
/// Wn = (delta/alpha)*I + A. With delta = 0 this is alpha * received * A.
WeightVector nonconservative_step(const Graph& g, const WeightVector& received,
                                  const DiffusionConfig& cfg);

/// Per-step received vectors and running totals of a diffusion run.
struct DiffusionTrajectory {
    std::vector<WeightVector> received; ///< received(k) for k = 0..steps
    std::vector<WeightVector> total;    ///< C(k) or N(k) for k = 0..steps
    std::size_t steps = 0;
};

/// Conservative trajectory: total(t) = (1-alpha)*total(0) + alpha*total(t-1)*Wc.
DiffusionTrajectory run_conservative(const Graph& g, const WeightVector& initial,
                                     const DiffusionConfig& cfg, std::size_t steps);

/// Non-conservative trajectory: total(t) = total(0) + alpha*total(t-1)*Wn,
/// equivalently the running sum of the received vectors.
DiffusionTrajectory run_nonconservative(const Graph& g, const WeightVector& initial,
                                        const DiffusionConfig& cfg, std::size_t steps);

/// CSV export: one row per step with the L1 norm of the total; per-node
/// columns included when `per_node` is set.
void write_trajectory_csv(std::ostream& out, const DiffusionTrajectory& traj, bool per_node);

} // namespace netdiff
