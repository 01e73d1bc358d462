#pragma once

#include <cstddef>
#include <cstdint>

#include "netdiff/graph.hpp"
#include "netdiff/influence.hpp"

namespace netdiff {

/// Synthetic follower network plus broadcast-cascade activity with planted
/// per-user influence, for end-to-end evaluation when no real dataset is
/// available.
struct SynthParams {
    std::size_t users = 200;
    std::size_t cascades = 1000;
    std::uint64_t seed = 1;
    double mean_out_degree = 8.0;   ///< mean follows per user (heavy-tailed)
    double transmit_scale = 0.8;    ///< scales planted weight into a vote probability
};

struct SynthData {
    Graph graph;                 ///< edge u -> v means "u follows v"
    ActivityLog log;             ///< one submission per cascade plus the votes it triggered
    std::vector<double> planted; ///< planted influence weight per user index
};

/// Deterministic given seed. Users gain followers in proportion to their
/// planted weight; cascades spread by broadcast, each member converting
/// each of its followers with probability proportional to the member's
/// planted weight.
SynthData synth_generate(const SynthParams& params);

} // namespace netdiff
