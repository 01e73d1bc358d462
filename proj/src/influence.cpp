#include "netdiff/influence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "netdiff/centrality.hpp"
#include "netdiff/spectral.hpp"

namespace netdiff {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        out.push_back(cur);
    }
    return out;
}

} // namespace

std::vector<const ActivityEvent*> ActivityLog::story_events(const std::string& story_id) const {
    std::vector<const ActivityEvent*> out;
    // events are sorted by story_id; binary search the block.
    auto lo = std::lower_bound(events.begin(), events.end(), story_id,
                               [](const ActivityEvent& e, const std::string& s) {
                                   return e.story_id < s;
                               });
    for (auto it = lo; it != events.end() && it->story_id == story_id; ++it)
        out.push_back(&*it);
    return out;
}

ActivityLog load_activity_log(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("activity log: empty stream");
    {
        auto header = split_csv_line(line);
        if (header != std::vector<std::string>{"story_id", "user_id", "timestamp", "kind"})
            throw DataError("activity log: expected header story_id,user_id,timestamp,kind");
    }

    ActivityLog log;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw DataError("activity log line " + std::to_string(line_no) +
                            ": expected 4 fields");
        ActivityEvent ev;
        ev.story_id = fields[0];
        ev.user_id = fields[1];
        const std::string& ts = fields[2];
        auto [p, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), ev.timestamp);
        if (ec != std::errc{} || p != ts.data() + ts.size())
            throw DataError("activity log line " + std::to_string(line_no) +
                            ": malformed timestamp '" + ts + "'");
        if (fields[3] == "submission")
            ev.kind = EventKind::Submission;
        else if (fields[3] == "vote")
            ev.kind = EventKind::Vote;
        else
            throw DataError("activity log line " + std::to_string(line_no) + ": unknown kind '" +
                            fields[3] + "'");
        log.events.push_back(std::move(ev));
    }

    std::stable_sort(log.events.begin(), log.events.end(),
                     [](const ActivityEvent& a, const ActivityEvent& b) {
                         if (a.story_id != b.story_id) return a.story_id < b.story_id;
                         return a.timestamp < b.timestamp;
                     });

    // Per-story validation.
    for (std::size_t i = 0; i < log.events.size();) {
        const std::string& sid = log.events[i].story_id;
        std::size_t j = i;
        std::size_t submissions = 0;
        double sub_ts = 0.0;
        while (j < log.events.size() && log.events[j].story_id == sid) {
            if (log.events[j].kind == EventKind::Submission) {
                ++submissions;
                sub_ts = log.events[j].timestamp;
            }
            ++j;
        }
        if (submissions == 0)
            throw DataError("activity log: story '" + sid + "' has no submission");
        if (submissions > 1)
            throw DataError("activity log: story '" + sid + "' has multiple submissions");
        for (std::size_t k = i; k < j; ++k)
            if (log.events[k].kind == EventKind::Vote && log.events[k].timestamp < sub_ts)
                throw DataError("activity log: story '" + sid + "' has a vote before its "
                                "submission");
        log.story_ids.push_back(sid);
        i = j;
    }
    return log;
}

ActivityLog load_activity_log_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open activity log file: " + path);
    return load_activity_log(in);
}

void write_activity_log_csv(std::ostream& out, const ActivityLog& log) {
    out.precision(17);
    out << "story_id,user_id,timestamp,kind\n";
    for (const ActivityEvent& e : log.events)
        out << e.story_id << ',' << e.user_id << ',' << e.timestamp << ','
            << (e.kind == EventKind::Submission ? "submission" : "vote") << '\n';
}

CascadeRecord extract_cascade(const Graph& g, const ActivityLog& log,
                              const std::string& story_id) {
    auto events = log.story_events(story_id);
    if (events.empty()) throw DataError("extract_cascade: unknown story '" + story_id + "'");

    // Submission sorts first within equal timestamps only by input order, so
    // find it explicitly.
    const ActivityEvent* submission = nullptr;
    for (const ActivityEvent* e : events)
        if (e->kind == EventKind::Submission) submission = e;

    CascadeRecord rec;
    rec.story_id = story_id;
    rec.submitter = submission->user_id;
    rec.members.push_back(submission->user_id);

    std::vector<char> member(g.node_count(), 0);
    if (auto idx = g.index_of(submission->user_id)) member[*idx] = 1;

    for (const ActivityEvent* e : events) {
        if (e->kind != EventKind::Vote) continue;
        auto idx = g.index_of(e->user_id);
        if (!idx || member[*idx]) continue;
        bool follows_member = false;
        for (const HalfEdge& he : g.out_neighbors(*idx)) {
            if (member[he.node]) {
                follows_member = true;
                break;
            }
        }
        if (follows_member) {
            member[*idx] = 1;
            rec.members.push_back(e->user_id);
        }
    }
    return rec;
}

std::vector<InfluenceEstimate> influence_estimates(const Graph& g, const ActivityLog& log,
                                                   std::size_t min_stories,
                                                   std::size_t min_votes, std::size_t first_k) {
    struct Acc {
        std::size_t stories = 0;
        double follower_votes = 0.0;
        double cascade_size = 0.0;
    };
    std::map<std::string, Acc> by_submitter;

    for (const std::string& sid : log.story_ids) {
        auto events = log.story_events(sid);
        const ActivityEvent* submission = nullptr;
        for (const ActivityEvent* e : events)
            if (e->kind == EventKind::Submission) submission = e;

        std::size_t votes = 0;
        for (const ActivityEvent* e : events)
            if (e->kind == EventKind::Vote) ++votes;
        if (votes < min_votes) continue;

        auto sub_idx = g.index_of(submission->user_id);
        std::size_t follower_votes = 0;
        std::size_t seen_votes = 0;
        for (const ActivityEvent* e : events) {
            if (e->kind != EventKind::Vote) continue;
            ++seen_votes;
            if (first_k != 0 && seen_votes > first_k) break;
            if (!sub_idx) continue;
            auto voter = g.index_of(e->user_id);
            if (voter && g.has_edge(*voter, *sub_idx)) ++follower_votes;
        }

        const CascadeRecord cascade = extract_cascade(g, log, sid);

        Acc& acc = by_submitter[submission->user_id];
        ++acc.stories;
        acc.follower_votes += static_cast<double>(follower_votes);
        acc.cascade_size += static_cast<double>(cascade.size());
    }

    std::vector<InfluenceEstimate> out;
    for (const auto& [user, acc] : by_submitter) {
        if (acc.stories < min_stories) continue;
        out.push_back({user, acc.stories,
                       acc.follower_votes / static_cast<double>(acc.stories),
                       acc.cascade_size / static_cast<double>(acc.stories)});
    }
    return out;
}

namespace {

// Tie-averaged ranks, 1-based.
std::vector<double> tied_ranks(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        const double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double pearson_rank_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw DataError("pearson_rank_correlation: inputs must have equal length >= 2");
    const std::vector<double> ra = tied_ranks(a);
    const std::vector<double> rb = tied_ranks(b);
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0.0 || vb == 0.0)
        throw NumericError("pearson_rank_correlation: constant ranking, correlation undefined");
    return cov / std::sqrt(va * vb);
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    for (int i = 1; i < 20; ++i) grid.push_back(i * 0.0005); // inset region [0, 0.01]
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

CorrelationSweep correlation_sweep(const Graph& g, const ActivityLog& log,
                                   const SweepOptions& opts) {
    const auto estimates = influence_estimates(g, log, opts.min_stories, opts.min_votes);
    if (estimates.empty())
        throw DataError("correlation_sweep: no submitter qualifies for an influence estimate");

    std::vector<NodeId> eligible;
    std::vector<double> est_votes, est_cascade;
    for (const auto& e : estimates) {
        auto idx = g.index_of(e.user_id);
        if (!idx) continue; // submitter not in the follower graph
        eligible.push_back(*idx);
        est_votes.push_back(e.avg_follower_votes);
        est_cascade.push_back(e.avg_cascade_size);
    }
    if (eligible.size() < 2)
        throw DataError("correlation_sweep: fewer than two eligible submitters in the graph");

    CorrelationSweep sweep;
    sweep.lambda1 = spectral_radius(g).lambda1;
    const double singular_alpha = sweep.lambda1 > 0.0 ? 1.0 / sweep.lambda1 : -1.0;

    const std::vector<double>& grid =
        opts.alpha_grid.empty() ? default_alpha_grid() : opts.alpha_grid;

    for (double alpha : grid) {
        for (SweepMetric metric : opts.metrics) {
            const bool is_pr = metric == SweepMetric::PageRank;
            const std::string name = is_pr ? "pagerank" : "nacentrality";
            std::string excluded;
            WeightVector restricted;

            if (is_pr && alpha == 0.0) {
                excluded = "pagerank ranking constant at alpha=0";
            } else if (!is_pr && singular_alpha > 0.0 &&
                       std::abs(alpha - singular_alpha) <= 0.01 * singular_alpha) {
                excluded = "within 1% of 1/lambda1";
            } else {
                CentralityConfig cfg;
                cfg.alpha = alpha;
                cfg.allow_alpha_one = true;
                CentralityResult res =
                    is_pr ? pagerank(g, cfg) : normalized_alpha_centrality(g, cfg);
                for (NodeId u : eligible) restricted.push_back(res.scores[u]);
            }

            for (int which = 0; which < 2; ++which) {
                SweepRow row;
                row.alpha = alpha;
                row.metric = name;
                row.estimate = which == 0 ? "follower_votes" : "cascade_size";
                row.excluded_reason = excluded;
                if (excluded.empty()) {
                    try {
                        row.correlation = pearson_rank_correlation(
                            restricted, which == 0 ? est_votes : est_cascade);
                    } catch (const NumericError&) {
                        row.excluded_reason = "constant ranking";
                    }
                }
                sweep.rows.push_back(std::move(row));
            }
        }
    }
    return sweep;
}

void write_sweep_csv(std::ostream& out, const CorrelationSweep& sweep) {
    out.precision(17);
    out << "alpha,metric,estimate,correlation,excluded_reason\n";
    for (const SweepRow& r : sweep.rows) {
        out << r.alpha << ',' << r.metric << ',' << r.estimate << ',';
        if (r.excluded_reason.empty()) out << r.correlation;
        out << ',' << r.excluded_reason << '\n';
    }
}

} // namespace netdiff
