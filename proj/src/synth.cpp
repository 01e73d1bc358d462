#include "netdiff/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

namespace netdiff {

SynthData synth_generate(const SynthParams& params) {
    const std::size_t n = params.users;
    if (n < 2) throw DataError("synth: need at least 2 users");
    if (params.mean_out_degree < 1.0 || params.mean_out_degree >= static_cast<double>(n))
        throw DataError("synth: mean_out_degree must lie in [1, users)");

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SynthData data;

    // Planted influence: lognormal, so a handful of users dominate.
    std::lognormal_distribution<double> lognorm(0.0, 0.8);
    data.planted.resize(n);
    for (double& w : data.planted) w = lognorm(rng);

    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));

    // Each user's follower count is pinned to the planted weight, while the
    // choice of who does the following is driven by a heavy-tailed activity
    // level independent of it: in-degree tracks influence, out-degree does not.
    std::exponential_distribution<double> activity_tail(1.0);
    std::vector<double> activity(n);
    for (double& a : activity) a = 0.2 + activity_tail(rng);
    std::discrete_distribution<std::size_t> by_activity(activity.begin(), activity.end());

    double weight_sum = 0.0;
    for (double w : data.planted) weight_sum += w;
    const double per_weight = params.mean_out_degree * static_cast<double>(n) / weight_sum;

    std::vector<Edge> edges;
    const std::size_t max_in = n - 1;
    for (NodeId v = 0; v < n; ++v) {
        std::size_t d = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::lround(per_weight * data.planted[v])));
        d = std::min(d, max_in);
        std::set<NodeId> followers;
        std::size_t attempts = 0;
        while (followers.size() < d && attempts < 200 * d) {
            ++attempts;
            NodeId u = static_cast<NodeId>(by_activity(rng));
            if (u != v) followers.insert(u);
        }
        for (NodeId u : followers) edges.push_back({u, v, 1.0});
    }
    data.graph = Graph::from_edges(n, std::move(edges), labels);

    // Vote probability a member's broadcast converts each follower.
    const double max_w = *std::max_element(data.planted.begin(), data.planted.end());
    std::vector<double> transmit(n);
    for (std::size_t i = 0; i < n; ++i)
        transmit[i] = std::clamp(params.transmit_scale * data.planted[i] / max_w, 0.01, 0.95);

    std::uniform_int_distribution<std::size_t> pick_user(0, n - 1);
    std::vector<char> member(n, 0);
    for (std::size_t c = 0; c < params.cascades; ++c) {
        const double t0 = static_cast<double>(c) * 1e6;
        const NodeId submitter = static_cast<NodeId>(pick_user(rng));
        const std::string sid = "s" + std::to_string(c);
        data.log.events.push_back({sid, labels[submitter], t0, EventKind::Submission});

        std::fill(member.begin(), member.end(), 0);
        member[submitter] = 1;
        std::vector<NodeId> frontier{submitter};
        double ts = t0;
        // Broadcast in join order: each new member exposes its followers.
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const NodeId m = frontier[i];
            for (const HalfEdge& e : data.graph.in_neighbors(m)) {
                const NodeId follower = e.node;
                if (member[follower]) continue;
                if (unit(rng) < transmit[m]) {
                    member[follower] = 1;
                    frontier.push_back(follower);
                    ts += 1.0;
                    data.log.events.push_back({sid, labels[follower], ts, EventKind::Vote});
                }
            }
        }
    }

    // Normalize through the validating loader path so the log is sorted and
    // carries story ids.
    std::stable_sort(data.log.events.begin(), data.log.events.end(),
                     [](const ActivityEvent& a, const ActivityEvent& b) {
                         if (a.story_id != b.story_id) return a.story_id < b.story_id;
                         return a.timestamp < b.timestamp;
                     });
    for (std::size_t i = 0; i < data.log.events.size();) {
        std::size_t j = i;
        while (j < data.log.events.size() &&
               data.log.events[j].story_id == data.log.events[i].story_id)
            ++j;
        data.log.story_ids.push_back(data.log.events[i].story_id);
        i = j;
    }
    return data;
}

} // namespace netdiff
