#pragma once

// Shared fixtures for the unit tests: tiny named graphs, a seeded random
// generator, and a dense adjacency helper used as an independent oracle.

#include <random>
#include <sstream>
#include <vector>

#include "netdiff/graph.hpp"

namespace testutil {

using netdiff::Edge;
using netdiff::Graph;
using netdiff::NodeId;

inline Graph directed_cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) edges.push_back({u, static_cast<NodeId>((u + 1) % n), 1.0});
    return Graph::from_edges(n, std::move(edges));
}

inline Graph directed_path(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, static_cast<NodeId>(u + 1), 1.0});
    return Graph::from_edges(n, std::move(edges));
}

/// Directed complete graph (no self-loops).
inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            if (u != v) edges.push_back({u, v, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

/// Star with both edge directions: hub 0 <-> leaves 1..n-1.
inline Graph undirected_star(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) {
        edges.push_back({0, v, 1.0});
        edges.push_back({v, 0, 1.0});
    }
    return Graph::from_edges(n, std::move(edges));
}

/// Star pointing outward only: hub 0 -> leaves.
inline Graph out_star(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.push_back({0, v, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

/// Seeded G(n, p) without self-loops.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
            if (u != v && unit(rng) < p) edges.push_back({u, v, 1.0});
    return Graph::from_edges(n, std::move(edges));
}

/// Dense adjacency copy, A[u][v] = weight of u -> v.
inline std::vector<std::vector<double>> dense_adjacency(const Graph& g) {
    std::vector<std::vector<double>> a(g.node_count(),
                                       std::vector<double>(g.node_count(), 0.0));
    for (const Edge& e : g.edges()) a[e.src][e.dst] = e.weight;
    return a;
}

/// y = x * A over the dense copy (row vector times matrix).
inline std::vector<double> dense_left_multiply(const std::vector<double>& x,
                                               const std::vector<std::vector<double>>& a) {
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t u = 0; u < x.size(); ++u)
        for (std::size_t v = 0; v < x.size(); ++v) y[v] += x[u] * a[u][v];
    return y;
}

/// The 8-node ranking-swap fixture: node "1" beats node "3" on attenuated
/// path counts while "3" beats "1" on conservative mass.
inline Graph ranking_swap_fixture() {
    std::istringstream in("2 1\n5 1\n8 1\n2 3\n4 3\n5 6\n5 7\n8 6\n8 7\n6 7\n7 6\n");
    return netdiff::load_edge_list(in);
}

} // namespace testutil
