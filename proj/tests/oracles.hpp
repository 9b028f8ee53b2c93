#ifndef APSP_TESTS_ORACLES_HPP
#define APSP_TESTS_ORACLES_HPP

// Reference implementations used only by tests. None of these call into the
// library beyond its data types.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "apsp/graph.hpp"
#include "apsp/matmul.hpp"

namespace oracle {

using apsp::dist_t;
using apsp::Edge;
using apsp::INF;
using apsp::Vertex;

inline constexpr std::int64_t kNone = INT64_MAX;

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine); }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }
    bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p; }
};

inline std::vector<Edge> random_edges(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.chance(p)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return edges;
}

inline apsp::Graph random_graph(std::size_t n, double p, Rng& rng) {
    return apsp::Graph(n, random_edges(n, p, rng));
}

inline apsp::Graph random_tree(std::size_t n, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(rng.below(v)), v);
    }
    return apsp::Graph(n, edges);
}

/// Adjacency as plain nested vectors rebuilt from an edge list.
inline std::vector<std::vector<Vertex>> adjacency(const apsp::Graph& g) {
    std::vector<std::vector<Vertex>> adj(g.num_vertices());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

/// Floyd-Warshall over the edge list.
inline std::vector<std::vector<dist_t>> floyd_warshall(const apsp::Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, UINT64_MAX / 4));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
    }
    for (auto [u, v] : g.edges()) {
        d[u][v] = d[v][u] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    std::vector<std::vector<dist_t>> out(n, std::vector<dist_t>(n, INF));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (d[i][j] < UINT64_MAX / 4) {
                out[i][j] = static_cast<dist_t>(d[i][j]);
            }
        }
    }
    return out;
}

/// Queue-based BFS on the nested adjacency; used where Floyd-Warshall is too slow.
inline std::vector<std::vector<dist_t>> all_pairs_bfs(const apsp::Graph& g) {
    const auto adj = adjacency(g);
    const std::size_t n = adj.size();
    std::vector<std::vector<dist_t>> out(n, std::vector<dist_t>(n, INF));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<Vertex> q;
        out[s][s] = 0;
        q.push(static_cast<Vertex>(s));
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex v : adj[u]) {
                if (out[s][v] == INF) {
                    out[s][v] = out[s][u] + 1;
                    q.push(v);
                }
            }
        }
    }
    return out;
}

/*
 * For each pair, the largest vertex degree found on any shortest path between
 * them (0 when unreachable). A pair whose value is >= D has a shortest path
 * through a vertex of degree >= D.
 */
inline std::vector<std::vector<std::size_t>> max_degree_on_shortest_paths(const apsp::Graph& g,
                                                                          const std::vector<std::vector<dist_t>>& d) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (d[u][v] == INF) {
                continue;
            }
            std::size_t best = 0;
            for (std::size_t x = 0; x < n; ++x) {
                if (d[u][x] != INF && d[x][v] != INF && d[u][x] + d[x][v] == d[u][v]) {
                    best = std::max(best, g.degree(static_cast<Vertex>(x)));
                }
            }
            out[u][v] = best;
        }
    }
    return out;
}

/// Distances inside the subgraph induced by vertices of degree <= cap.
inline std::vector<std::vector<dist_t>> low_degree_distances(const apsp::Graph& g, std::size_t cap) {
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) <= cap && g.degree(v) <= cap) {
            kept.emplace_back(u, v);
        }
    }
    return all_pairs_bfs(apsp::Graph(g.num_vertices(), kept));
}

/// O(n^2) array Dijkstra over a weighted arc list, with extra arcs from the source.
inline std::vector<std::uint64_t> naive_dijkstra(std::size_t n, const std::vector<apsp::WeightedEdge>& edges,
                                                 Vertex source,
                                                 const std::vector<std::pair<Vertex, std::int64_t>>& extra) {
    std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, UINT64_MAX));
    for (const auto& e : edges) {
        const auto x = static_cast<std::uint64_t>(e.weight);
        w[e.u][e.v] = std::min(w[e.u][e.v], x);
        w[e.v][e.u] = std::min(w[e.v][e.u], x);
    }
    for (auto [t, x] : extra) {
        w[source][t] = std::min(w[source][t], static_cast<std::uint64_t>(x));
    }
    std::vector<std::uint64_t> dist(n, UINT64_MAX);
    std::vector<char> done(n, 0);
    dist[source] = 0;
    for (std::size_t it = 0; it < n; ++it) {
        std::size_t u = n;
        for (std::size_t x = 0; x < n; ++x) {
            if (!done[x] && dist[x] != UINT64_MAX && (u == n || dist[x] < dist[u])) {
                u = x;
            }
        }
        if (u == n) {
            break;
        }
        done[u] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (w[u][v] != UINT64_MAX) {
                dist[v] = std::min(dist[v], dist[u] + w[u][v]);
            }
        }
    }
    return dist;
}

/// Triple-loop tropical product; kNone marks absent entries.
inline std::vector<std::vector<std::int64_t>> tropical(const std::vector<std::vector<std::int64_t>>& a,
                                                       const std::vector<std::vector<std::int64_t>>& b) {
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n3 = n2 == 0 ? 0 : b[0].size();
    std::vector<std::vector<std::int64_t>> c(n1, std::vector<std::int64_t>(n3, kNone));
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t k = 0; k < n2; ++k) {
            if (a[i][k] == kNone) {
                continue;
            }
            for (std::size_t j = 0; j < n3; ++j) {
                if (b[k][j] != kNone) {
                    c[i][j] = std::min(c[i][j], a[i][k] + b[k][j]);
                }
            }
        }
    }
    return c;
}

/// Positional coefficients of a packed wide integer: digit t of width `bits`.
inline std::vector<std::uint64_t> digits(const apsp::WideInt& x, std::size_t bits, std::size_t count) {
    std::vector<std::uint64_t> out(count, 0);
    const auto& limbs = x.limbs();
    for (std::size_t t = 0; t < count; ++t) {
        std::uint64_t v = 0;
        for (std::size_t b = 0; b < bits; ++b) {
            const std::size_t pos = t * bits + b;
            if (pos / 64 < limbs.size() && ((limbs[pos / 64] >> (pos % 64)) & 1u)) {
                v |= std::uint64_t{1} << b;
            }
        }
        out[t] = v;
    }
    return out;
}

/// Polynomial product of digit vectors (no carries).
inline std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

} // namespace oracle

#endif
