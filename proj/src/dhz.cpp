#include <algorithm>
#include <cmath>
#include <string>

#include "apsp/apsp.hpp"
#include "descent.hpp"

namespace apsp {

namespace detail {

WeightedGraph bridged_edge_set(const Graph& g, std::size_t threshold, const std::vector<Vertex>& hitting) {
    const std::size_t n = g.num_vertices();
    std::vector<char> in_hitting(n, 0);
    for (Vertex s : hitting) {
        in_hitting[s] = 1;
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) < threshold) {
            for (Vertex v : g.neighbors(u)) {
                // each light-light edge once; light-heavy edges from the light side
                if (g.degree(v) >= threshold || u < v) {
                    edges.emplace_back(u, v);
                }
            }
            continue;
        }
        auto nb = g.neighbors(u);
        auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex v) { return in_hitting[v] != 0; });
        if (it == nb.end()) {
            throw InputError("hitting set misses the neighborhood of vertex " + std::to_string(u));
        }
        edges.emplace_back(u, *it);
    }
    return WeightedGraph::unit(n, edges);
}

void merge_symmetric(Dense<dist_t>& est, Vertex u, const std::vector<dist_t>& row) {
    for (std::size_t v = 0; v < row.size(); ++v) {
        const auto ev = static_cast<Eigen::Index>(v);
        if (row[v] < est(u, ev)) {
            est(u, ev) = row[v];
        }
        if (row[v] < est(ev, u)) {
            est(ev, u) = row[v];
        }
    }
}

void descend(const Graph& g, const std::vector<std::vector<Vertex>>& levels,
             const std::vector<std::size_t>& thresholds, Dense<dist_t>& est) {
    const std::size_t top = levels.size() - 1;
    const std::size_t n = g.num_vertices();
    std::vector<dist_t> row(n);
    for (std::size_t step = 0; step < top; ++step) {
        const std::size_t i = top - 1 - step;
        const WeightedGraph edges = bridged_edge_set(g, thresholds[i + 1], levels[i + 1]);
        for (Vertex u : levels[i]) {
            for (std::size_t v = 0; v < n; ++v) {
                row[v] = est(u, static_cast<Eigen::Index>(v));
            }
            merge_symmetric(est, u, dijkstra_overlay(edges, u, row));
        }
    }
}

void finalize_estimates(Dense<dist_t>& est) {
    const Eigen::Index n = est.rows();
    for (Eigen::Index u = 0; u < n; ++u) {
        est(u, u) = 0;
        for (Eigen::Index v = u + 1; v < n; ++v) {
            const dist_t m = std::min(est(u, v), est(v, u));
            est(u, v) = m;
            est(v, u) = m;
        }
    }
}

} // namespace detail

DistanceMatrix exact_apsp_oracle(const Graph& g) {
    const std::size_t n = g.num_vertices();
    return multi_bfs(g, iota_vertices(n));
}

std::vector<std::size_t> dhz_default_thresholds(const Graph& g, std::size_t k) {
    const std::size_t n = g.num_vertices();
    const double density = n == 0 ? 1.0 : std::max(1.0, static_cast<double>(g.num_edges()) / static_cast<double>(n));
    std::vector<std::size_t> out(k + 1, 1);
    for (std::size_t i = 1; i <= k; ++i) {
        const double x = std::pow(density, static_cast<double>(i) / static_cast<double>(k + 1));
        out[i] = std::max(out[i - 1], static_cast<std::size_t>(std::ceil(x - 1e-9)));
    }
    return out;
}

EstimateMatrix dhz_sparse_apsp(const Graph& g, std::size_t k, std::optional<std::vector<std::size_t>> thresholds) {
    if (k < 1) {
        throw InputError("dhz_sparse_apsp: k must be >= 1");
    }
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> d = thresholds ? *thresholds : dhz_default_thresholds(g, k);
    if (d.size() != k + 1 || d[0] != 1 || !std::is_sorted(d.begin(), d.end())) {
        throw InputError("dhz_sparse_apsp: thresholds must be k+1 nondecreasing values starting at 1");
    }

    std::vector<std::vector<Vertex>> levels(k + 1);
    levels[0] = iota_vertices(n);
    for (std::size_t i = 1; i <= k; ++i) {
        if (d[i] <= n && n > 0) {
            levels[i] = greedy_hitting_set(g, d[i]).vertices;
        }
    }

    EstimateMatrix out = DistanceMatrix::square(n);
    for (Vertex s : levels[k]) {
        detail::merge_symmetric(out.values, s, bfs_from(g, s));
    }
    detail::descend(g, levels, d, out.values);
    detail::finalize_estimates(out.values);
    return out;
}

EstimateMatrix sparse_restricted_apsp(const Graph& g, std::size_t d, std::size_t k) {
    return dhz_sparse_apsp(low_degree_edge_subgraph(g, d), k);
}

} // namespace apsp
