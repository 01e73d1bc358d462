#include "netdiff/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace netdiff {

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges,
                        std::vector<std::string> labels) {
    Graph g;
    g.n_ = node_count;

    for (const Edge& e : edges) {
        if (e.src >= node_count || e.dst >= node_count)
            throw DataError("edge endpoint out of range: " + std::to_string(e.src) + " -> " +
                            std::to_string(e.dst));
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw DataError("edge weight must be a positive finite real");
    }

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.src != b.src ? a.src < b.src : a.dst < b.dst;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].src == edges[i - 1].src && edges[i].dst == edges[i - 1].dst)
            throw DataError("duplicate edge " + std::to_string(edges[i].src) + " -> " +
                            std::to_string(edges[i].dst));
    }
    g.edges_ = std::move(edges);

    // CSR for both orientations.
    g.out_off_.assign(node_count + 1, 0);
    g.in_off_.assign(node_count + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.out_off_[e.src + 1];
        ++g.in_off_[e.dst + 1];
    }
    for (std::size_t i = 0; i < node_count; ++i) {
        g.out_off_[i + 1] += g.out_off_[i];
        g.in_off_[i + 1] += g.in_off_[i];
    }
    g.out_adj_.resize(g.edges_.size());
    g.in_adj_.resize(g.edges_.size());
    std::vector<std::size_t> pos_out(g.out_off_.begin(), g.out_off_.end() - 1);
    std::vector<std::size_t> pos_in(g.in_off_.begin(), g.in_off_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.out_adj_[pos_out[e.src]++] = {e.dst, e.weight};
        g.in_adj_[pos_in[e.dst]++] = {e.src, e.weight};
    }
    for (std::size_t u = 0; u < node_count; ++u) {
        auto* beg = g.in_adj_.data() + g.in_off_[u];
        auto* end = g.in_adj_.data() + g.in_off_[u + 1];
        std::sort(beg, end, [](const HalfEdge& a, const HalfEdge& b) { return a.node < b.node; });
    }

    g.degrees_.out_degree.assign(node_count, 0.0);
    g.degrees_.in_degree.assign(node_count, 0.0);
    for (const Edge& e : g.edges_) {
        g.degrees_.out_degree[e.src] += e.weight;
        g.degrees_.in_degree[e.dst] += e.weight;
    }
    g.degrees_.d_max = 0.0;
    for (double d : g.degrees_.out_degree) g.degrees_.d_max = std::max(g.degrees_.d_max, d);

    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    } else if (labels.size() != node_count) {
        throw DataError("label count does not match node count");
    }
    g.labels_ = std::move(labels);
    g.label_index_.reserve(g.labels_.size());
    for (NodeId i = 0; i < g.labels_.size(); ++i) {
        auto [it, inserted] = g.label_index_.emplace(g.labels_[i], i);
        if (!inserted) throw DataError("duplicate node label: " + g.labels_[i]);
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nbrs = out_neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const HalfEdge& h, NodeId x) { return h.node < x; });
    return it != nbrs.end() && it->node == v;
}

std::optional<NodeId> Graph::index_of(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::transposed() const {
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const Edge& e : edges_) rev.push_back({e.dst, e.src, e.weight});
    return from_edges(n_, std::move(rev), labels_);
}

namespace {

double parse_weight(std::string_view tok, std::size_t line_no) {
    double w = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw DataError("line " + std::to_string(line_no) + ": malformed weight '" +
                        std::string(tok) + "'");
    return w;
}

} // namespace

Graph load_edge_list(std::istream& in, const EdgeListOptions& opts) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& s) -> NodeId {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        labels.push_back(s);
        index.emplace(s, id);
        return id;
    };

    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ls(line);
        std::string src, dst, wtok, extra;
        ls >> src >> dst;
        if (dst.empty())
            throw DataError("line " + std::to_string(line_no) + ": expected 'src dst [weight]'");
        double w = 1.0;
        if (ls >> wtok) {
            w = parse_weight(wtok, line_no);
            if (ls >> extra)
                throw DataError("line " + std::to_string(line_no) + ": trailing token '" + extra +
                                "'");
        }
        if (!(w > 0.0) || !std::isfinite(w))
            throw DataError("line " + std::to_string(line_no) +
                            ": weight must be a positive finite real");
        NodeId s = intern(src), d = intern(dst);
        if (s == d && !opts.allow_self_loops)
            throw DataError("line " + std::to_string(line_no) + ": self-loop on '" + src + "'");
        if (opts.reverse_edges) std::swap(s, d);
        edges.push_back({s, d, w});
    }

    const std::size_t n = labels.size();
    try {
        return Graph::from_edges(n, std::move(edges), std::move(labels));
    } catch (const DataError& e) {
        throw DataError(std::string("edge list: ") + e.what());
    }
}

Graph load_edge_list_file(const std::string& path, const EdgeListOptions& opts) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open edge list file: " + path);
    return load_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out.precision(17);
    for (const Edge& e : g.edges()) {
        out << g.label_of(e.src) << '\t' << g.label_of(e.dst);
        if (e.weight != 1.0) out << '\t' << e.weight;
        out << '\n';
    }
}

std::string graph_metadata_json(const Graph& g) {
    nlohmann::json j;
    j["node_count"] = g.node_count();
    j["edge_count"] = g.edge_count();
    nlohmann::json lab = nlohmann::json::object();
    for (NodeId i = 0; i < g.node_count(); ++i) lab[g.label_of(i)] = i;
    j["labels"] = std::move(lab);
    return j.dump(2);
}

} // namespace netdiff
