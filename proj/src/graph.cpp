#include "apsp/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace apsp {

DistanceMatrix::DistanceMatrix(std::vector<Vertex> row_labels, std::vector<Vertex> col_labels)
    : rows(std::move(row_labels)), cols(std::move(col_labels)),
      values(inf_matrix<dist_t>(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()))) {}

DistanceMatrix DistanceMatrix::square(std::size_t n) {
    return DistanceMatrix(iota_vertices(n), iota_vertices(n));
}

std::vector<Vertex> iota_vertices(std::size_t n) {
    std::vector<Vertex> out(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

namespace {

void check_vertex(std::size_t n, Vertex v) {
    if (v >= n) {
        throw InputError("vertex id " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    }
}

} // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
        check_vertex(n, u);
        check_vertex(n, v);
        if (u != v) {
            ++deg[u];
            ++deg[v];
        }
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) {
        offsets_[u + 1] = offsets_[u] + deg[u];
    }
    std::vector<Vertex> raw(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u != v) {
            raw[fill[u]++] = v;
            raw[fill[v]++] = u;
        }
    }
    // sort and dedupe each list, then compact
    std::vector<std::size_t> compact(n + 1, 0);
    targets_.reserve(raw.size());
    for (std::size_t u = 0; u < n; ++u) {
        auto first = raw.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
        auto last = raw.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        targets_.insert(targets_.end(), first, last);
        compact[u + 1] = targets_.size();
    }
    offsets_ = std::move(compact);
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t u = 0; u < num_vertices(); ++u) {
        best = std::max(best, degree(static_cast<Vertex>(u)));
    }
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (std::size_t u = 0; u < num_vertices(); ++u) {
        for (Vertex v : neighbors(static_cast<Vertex>(u))) {
            if (u < v) {
                out.emplace_back(static_cast<Vertex>(u), v);
            }
        }
    }
    return out;
}

WeightedGraph::WeightedGraph(std::size_t n, std::span<const WeightedEdge> edges) {
    offsets_.assign(n + 1, 0);
    for (const auto& e : edges) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.weight < 0) {
            throw InputError("negative edge weight");
        }
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.resize(offsets_[n]);
    weights_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges) {
        const dist_t w = e.weight >= static_cast<std::int64_t>(INF) ? INF : static_cast<dist_t>(e.weight);
        targets_[fill[e.u]] = e.v;
        weights_[fill[e.u]++] = w;
        targets_[fill[e.v]] = e.u;
        weights_[fill[e.v]++] = w;
    }
}

WeightedGraph WeightedGraph::unit(std::size_t n, std::span<const Edge> edges) {
    std::vector<WeightedEdge> weighted;
    weighted.reserve(edges.size());
    for (auto [u, v] : edges) {
        weighted.push_back({u, v, 1});
    }
    return WeightedGraph(n, weighted);
}

std::vector<dist_t> bfs_from(const Graph& g, Vertex s) {
    const std::size_t n = g.num_vertices();
    check_vertex(n, s);
    std::vector<dist_t> dist(n, INF);
    std::vector<Vertex> queue;
    queue.reserve(n);
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] == INF) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix multi_bfs(const Graph& g, std::span<const Vertex> sources) {
    const std::size_t n = g.num_vertices();
    DistanceMatrix out(std::vector<Vertex>(sources.begin(), sources.end()), iota_vertices(n));
    for (std::size_t i = 0; i < sources.size(); ++i) {
        auto row = bfs_from(g, sources[i]);
        out.values.row(static_cast<Eigen::Index>(i)) =
            Eigen::Map<const Eigen::Matrix<dist_t, 1, Eigen::Dynamic>>(row.data(), static_cast<Eigen::Index>(n));
    }
    return out;
}

namespace {

using HeapItem = std::pair<dist_t, Vertex>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

void run_dijkstra(const WeightedGraph& base, std::vector<dist_t>& dist, MinHeap& heap) {
    while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (du != dist[u]) {
            continue;
        }
        auto targets = base.targets(u);
        auto weights = base.weights(u);
        for (std::size_t e = 0; e < targets.size(); ++e) {
            const dist_t cand = sat_add(du, weights[e]);
            const Vertex v = targets[e];
            if (cand < dist[v]) {
                dist[v] = cand;
                heap.emplace(cand, v);
            }
        }
    }
}

} // namespace

std::vector<dist_t> dijkstra_overlay(const WeightedGraph& base, Vertex source,
                                     std::span<const VirtualEdge> virtual_edges) {
    const std::size_t n = base.num_vertices();
    check_vertex(n, source);
    std::vector<dist_t> dist(n, INF);
    MinHeap heap;
    dist[source] = 0;
    heap.emplace(0, source);
    for (const auto& e : virtual_edges) {
        check_vertex(n, e.target);
        if (e.weight < 0) {
            throw InputError("negative virtual edge weight");
        }
        if (e.weight >= static_cast<std::int64_t>(INF)) {
            continue;
        }
        const auto w = static_cast<dist_t>(e.weight);
        if (w < dist[e.target]) {
            dist[e.target] = w;
            heap.emplace(w, e.target);
        }
    }
    run_dijkstra(base, dist, heap);
    return dist;
}

std::vector<dist_t> dijkstra_overlay(const WeightedGraph& base, Vertex source,
                                     std::span<const dist_t> virtual_row) {
    const std::size_t n = base.num_vertices();
    check_vertex(n, source);
    if (virtual_row.size() != n) {
        throw InputError("virtual row length does not match vertex count");
    }
    std::vector<dist_t> dist(virtual_row.begin(), virtual_row.end());
    dist[source] = 0;
    std::vector<HeapItem> items;
    items.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] != INF) {
            items.emplace_back(dist[v], static_cast<Vertex>(v));
        }
    }
    MinHeap heap(std::greater<>{}, std::move(items));
    run_dijkstra(base, dist, heap);
    return dist;
}

std::vector<dist_t> dijkstra_overlay(std::span<const WeightedEdge> edges, std::size_t n, Vertex source,
                                     std::span<const VirtualEdge> virtual_edges) {
    return dijkstra_overlay(WeightedGraph(n, edges), source, virtual_edges);
}

Graph restrict_to_max_degree(const Graph& g, std::size_t cap) {
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) <= cap && g.degree(v) <= cap) {
            kept.emplace_back(u, v);
        }
    }
    return Graph(g.num_vertices(), kept);
}

Graph low_degree_edge_subgraph(const Graph& g, std::size_t d) {
    if (d < 1) {
        throw InputError("low_degree_edge_subgraph: d must be >= 1");
    }
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) <= d || g.degree(v) <= d) {
            kept.emplace_back(u, v);
        }
    }
    return Graph(g.num_vertices(), kept);
}

} // namespace apsp
