#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netdiff/graph.hpp"
#include "netdiff/vec.hpp"

namespace netdiff {

enum class EventKind { Submission, Vote };

struct ActivityEvent {
    std::string story_id;
    std::string user_id;
    double timestamp = 0.0;
    EventKind kind = EventKind::Vote;
};

/// Validated activity stream: exactly one submission per story, no vote
/// before its story's submission, events sorted by (story_id, timestamp)
/// with input order preserved on timestamp ties.
struct ActivityLog {
    std::vector<ActivityEvent> events;
    std::vector<std::string> story_ids; ///< distinct stories, sorted

    /// Events of one story in time order, submission first.
    std::vector<const ActivityEvent*> story_events(const std::string& story_id) const;
};

/// Parse `story_id,user_id,timestamp,kind` CSV (header required).
ActivityLog load_activity_log(std::istream& in);
ActivityLog load_activity_log_file(const std::string& path);

/// Inverse of load_activity_log.
void write_activity_log_csv(std::ostream& out, const ActivityLog& log);

/// Submitter plus all voters connected to it through time-respecting
/// follower links.
struct CascadeRecord {
    std::string story_id;
    std::string submitter;
    std::vector<std::string> members; ///< join order, submitter first
    std::size_t size() const { return members.size(); }
};

/// Scan the story's votes in time order; a voter joins iff it follows
/// (has an out-edge in g to) at least one member that joined earlier.
CascadeRecord extract_cascade(const Graph& follower_graph, const ActivityLog& log,
                              const std::string& story_id);

struct InfluenceEstimate {
    std::string user_id;
    std::size_t stories_counted = 0;
    double avg_follower_votes = 0.0;
    double avg_cascade_size = 0.0;
};

/// Per-submitter averages over qualifying stories (>= min_votes votes each);
/// submitters with fewer than min_stories qualifying stories are dropped.
/// `first_k` limits follower-vote counting to the first k votes (0 = all).
std::vector<InfluenceEstimate> influence_estimates(const Graph& follower_graph,
                                                   const ActivityLog& log,
                                                   std::size_t min_stories = 2,
                                                   std::size_t min_votes = 100,
                                                   std::size_t first_k = 0);

/// Pearson correlation of tie-averaged ranks (Spearman with tie correction).
/// Throws NumericError when either input has zero rank variance.
double pearson_rank_correlation(std::span<const double> a, std::span<const double> b);

enum class SweepMetric { PageRank, NormalizedAlphaCentrality };

struct SweepRow {
    double alpha = 0.0;
    std::string metric;
    std::string estimate; ///< follower_votes | cascade_size
    double correlation = 0.0;
    std::string excluded_reason; ///< empty when the point was computed
};

struct CorrelationSweep {
    std::vector<SweepRow> rows;
    double lambda1 = 0.0;
};

struct SweepOptions {
    std::vector<double> alpha_grid; ///< empty = default grid (0..1 step .01 plus dense inset)
    std::vector<SweepMetric> metrics{SweepMetric::PageRank,
                                     SweepMetric::NormalizedAlphaCentrality};
    std::size_t min_stories = 2;
    std::size_t min_votes = 100;
};

/// Default grid: 0 to 1 step 0.01 plus 0 to 0.01 step 0.0005 for the inset
/// region.
std::vector<double> default_alpha_grid();

/// Correlate centrality rankings (restricted to users with estimates)
/// against both empirical estimates across the alpha grid. PageRank at
/// alpha = 0 and normalized Alpha-Centrality within 1% of 1/lambda1 are
/// excluded with a reason.
CorrelationSweep correlation_sweep(const Graph& follower_graph, const ActivityLog& log,
                                   const SweepOptions& opts = {});

void write_sweep_csv(std::ostream& out, const CorrelationSweep& sweep);

} // namespace netdiff
