#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netdiff/graph.hpp"
#include "netdiff/vec.hpp"

namespace netdiff {

struct EpidemicParams {
    double mu = 0.1;   ///< per-edge infection probability per step
    double beta = 0.1; ///< curing probability per step
    WeightVector p0;   ///< initial infection probabilities, entries in [0,1]
    std::size_t steps = 100;

    void validate(std::size_t node_count) const;
};

enum class EpidemicClassification { DiedOut, Persisted, Indeterminate };

struct EpidemicTrace {
    /// Deterministic matrix recurrence P_t = P_{t-1}((1-beta)I + mu A),
    /// reported raw; entries above 1 are possible and flagged.
    std::vector<WeightVector> deterministic;
    bool probabilities_exceed_one = false;

    /// Per-trial infected counts per step (stochastic runs only).
    std::vector<std::vector<std::uint32_t>> infected_counts;
    std::size_t trials = 0;

    EpidemicClassification classification = EpidemicClassification::Indeterminate;
};

/// Linear SIS recurrence of the network epidemic model. Equals the received
/// vectors of non-conservative diffusion with alpha = mu, delta = 1 - beta.
EpidemicTrace sis_deterministic(const Graph& g, const EpidemicParams& params);

/// Synchronous stochastic SIS realization: every infected node infects each
/// out-neighbor with probability min(1, mu * w), then every infected node
/// (including same-step infections) is cured with probability beta.
/// Deterministic given seed; trials use independently derived seeds.
EpidemicTrace sis_montecarlo(const Graph& g, const EpidemicParams& params, std::size_t trials,
                             std::uint64_t seed, std::size_t threads = 1);

struct ThresholdRow {
    double ratio = 0.0; ///< mu / beta
    double mu = 0.0;
    double beta = 0.0;
    double mean_final_infected = 0.0;
    EpidemicClassification classification = EpidemicClassification::Indeterminate;
};

struct ThresholdTable {
    std::vector<ThresholdRow> rows;
    double tau = 0.0; ///< epidemic threshold 1/lambda1 of g
};

/// Monte Carlo sweep over mu/beta ratios at fixed beta, starting from the
/// all-infected state. Died-out: mean infected at the horizon below one
/// node; persisted: above 5% of n.
ThresholdTable threshold_experiment(const Graph& g, const std::vector<double>& ratios,
                                    double beta, std::size_t trials, std::size_t horizon,
                                    std::uint64_t seed, std::size_t threads = 1);

} // namespace netdiff
