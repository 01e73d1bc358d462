#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netdiff/error.hpp"

namespace netdiff {

using NodeId = std::uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    double weight = 1.0;
};

/// Adjacency entry: the other endpoint of an edge plus its weight.
struct HalfEdge {
    NodeId node;
    double weight;
};

/// Weighted out/in degrees of every node. out_degree(u) is the sum of
/// weights of u's out-edges; d_max is the largest weighted out-degree.
struct DegreeTable {
    std::vector<double> out_degree;
    std::vector<double> in_degree;
    double d_max = 0.0;
};

/// Immutable directed weighted graph with dense integer node ids.
///
/// Both out- and in-adjacency are stored in CSR form, so solvers can pick
/// whichever orientation the recurrence needs. Safe to share across threads
/// after construction.
class Graph {
public:
    Graph() = default;

    /// Build a validated graph. Endpoints must lie in [0, node_count),
    /// weights must be positive and finite, duplicate (src,dst) pairs are
    /// rejected. `labels`, when given, must have node_count entries; when
    /// empty, decimal index strings are used.
    static Graph from_edges(std::size_t node_count, std::vector<Edge> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges sorted by (src, dst).
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const HalfEdge> out_neighbors(NodeId u) const {
        return {out_adj_.data() + out_off_[u], out_off_[u + 1] - out_off_[u]};
    }
    std::span<const HalfEdge> in_neighbors(NodeId u) const {
        return {in_adj_.data() + in_off_[u], in_off_[u + 1] - in_off_[u]};
    }

    /// True iff the edge u -> v exists.
    bool has_edge(NodeId u, NodeId v) const;

    const DegreeTable& degrees() const { return degrees_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label_of(NodeId u) const { return labels_[u]; }
    std::optional<NodeId> index_of(std::string_view label) const;

    /// Graph with every edge reversed, same weights and labels.
    Graph transposed() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_off_, in_off_;
    std::vector<HalfEdge> out_adj_, in_adj_;
    DegreeTable degrees_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
};

/// Weighted degrees of g (precomputed at construction).
inline const DegreeTable& degrees(const Graph& g) { return g.degrees(); }

struct EdgeListOptions {
    bool allow_self_loops = true;
    bool reverse_edges = false;
};

/// Parse a UTF-8 edge list: one `src dst [weight]` per line, tab- or
/// whitespace-separated, `#`-prefixed comment lines ignored. Missing weight
/// defaults to 1.0. Labels are mapped to dense indices in first-appearance
/// order. Malformed lines raise DataError naming the line number.
Graph load_edge_list(std::istream& in, const EdgeListOptions& opts = {});
Graph load_edge_list_file(const std::string& path, const EdgeListOptions& opts = {});

/// Write the canonical edge list; load_edge_list of the output reproduces
/// the graph (labels included).
void write_edge_list(std::ostream& out, const Graph& g);

/// JSON metadata sidecar: node count, edge count, label map.
std::string graph_metadata_json(const Graph& g);

} // namespace netdiff
