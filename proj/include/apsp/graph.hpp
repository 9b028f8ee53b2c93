#ifndef APSP_GRAPH_HPP
#define APSP_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "apsp/types.hpp"

namespace apsp {

using Edge = std::pair<Vertex, Vertex>;

/*
 * Immutable undirected simple unweighted graph in CSR form. Construction
 * symmetrizes the input, drops self-loops and removes duplicate edges, so
 * neighbor lists are sorted and unique.
 */
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const { return targets_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
    std::size_t max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

struct WeightedEdge {
    Vertex u;
    Vertex v;
    std::int64_t weight;
};

/// A weighted edge from the search source to `target`.
struct VirtualEdge {
    Vertex target;
    std::int64_t weight;
};

/*
 * Undirected graph with nonnegative integer weights, used as the base edge
 * set for overlay searches. Parallel edges are kept; the search only ever
 * relaxes the cheapest one.
 */
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t n, std::span<const WeightedEdge> edges);

    /// Unit-weight copy of `edges`.
    static WeightedGraph unit(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_arcs() const { return targets_.size(); }

    std::span<const Vertex> targets(Vertex u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }
    std::span<const dist_t> weights(Vertex u) const {
        return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<dist_t> weights_;
};

/// Exact single-source distances; INF for unreachable vertices.
std::vector<dist_t> bfs_from(const Graph& g, Vertex s);

/// One BFS row per source; row labels are the sources, columns are 0..n-1.
DistanceMatrix multi_bfs(const Graph& g, std::span<const Vertex> sources);

/// Shortest distances from `source` over `base` plus virtual edges leaving
/// the source with the given weights.
std::vector<dist_t> dijkstra_overlay(const WeightedGraph& base, Vertex source,
                                     std::span<const VirtualEdge> virtual_edges);

/// Same, with virtual edges given as a dense row: entry v is the weight of
/// the virtual edge source -> v, INF meaning no edge.
std::vector<dist_t> dijkstra_overlay(const WeightedGraph& base, Vertex source,
                                     std::span<const dist_t> virtual_row);

std::vector<dist_t> dijkstra_overlay(std::span<const WeightedEdge> edges, std::size_t n, Vertex source,
                                     std::span<const VirtualEdge> virtual_edges);

/// Induced subgraph on {v : deg(v) <= cap}. Vertex ids are kept; removed
/// vertices become isolated.
Graph restrict_to_max_degree(const Graph& g, std::size_t cap);

/// Keeps exactly the edges with at least one endpoint of degree <= d.
Graph low_degree_edge_subgraph(const Graph& g, std::size_t d);

} // namespace apsp

#endif
