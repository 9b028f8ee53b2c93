#include "apsp/sampling.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace apsp {

HittingSet greedy_hitting_set(const Graph& g, std::size_t d) {
    const std::size_t n = g.num_vertices();
    if (d < 1 || d > n) {
        throw InputError("greedy_hitting_set: threshold " + std::to_string(d) + " outside [1, n]");
    }
    std::vector<char> uncovered(n, 0);
    std::vector<std::size_t> gain(n, 0);
    std::size_t remaining = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) >= d) {
            uncovered[u] = 1;
            ++remaining;
            for (Vertex v : g.neighbors(u)) {
                ++gain[v];
            }
        }
    }

    // max-gain lazy heap; larger gain first, then smaller id
    using Item = std::pair<std::size_t, std::int64_t>;
    std::priority_queue<Item> heap;
    for (Vertex v = 0; v < n; ++v) {
        if (gain[v] > 0) {
            heap.emplace(gain[v], -static_cast<std::int64_t>(v));
        }
    }

    HittingSet out;
    out.threshold = d;
    std::vector<char> chosen(n, 0);
    while (remaining > 0) {
        auto [gv, negv] = heap.top();
        heap.pop();
        const auto v = static_cast<Vertex>(-negv);
        if (chosen[v] || gv != gain[v]) {
            continue;
        }
        chosen[v] = 1;
        out.vertices.push_back(v);
        for (Vertex t : g.neighbors(v)) {
            if (!uncovered[t]) {
                continue;
            }
            uncovered[t] = 0;
            --remaining;
            for (Vertex w : g.neighbors(t)) {
                --gain[w];
                if (gain[w] > 0 && !chosen[w]) {
                    heap.emplace(gain[w], -static_cast<std::int64_t>(w));
                }
            }
        }
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

bool covers_high_degree(const Graph& g, std::span<const Vertex> set, std::size_t threshold) {
    std::vector<char> in_set(g.num_vertices(), 0);
    for (Vertex s : set) {
        in_set[s] = 1;
    }
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (g.degree(u) < threshold) {
            continue;
        }
        auto nb = g.neighbors(u);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex v) { return in_set[v] != 0; })) {
            return false;
        }
    }
    return true;
}

std::vector<char> Decomposition::remainder_mask(std::size_t n) const {
    std::vector<char> mask(n, 0);
    for (Vertex r : remainder) {
        mask[r] = 1;
    }
    return mask;
}

Decomposition decompose(const Graph& g, std::size_t d) {
    const std::size_t n = g.num_vertices();
    if (d < 1 || (n > 0 && d > n)) {
        throw InputError("decompose: threshold " + std::to_string(d) + " outside [1, n]");
    }
    std::vector<char> alive(n, 1);
    std::vector<std::size_t> residual(n);
    for (Vertex u = 0; u < n; ++u) {
        residual[u] = g.degree(u);
    }
    auto remove = [&](Vertex x) {
        alive[x] = 0;
        for (Vertex y : g.neighbors(x)) {
            --residual[y];
        }
    };

    Decomposition out;
    out.threshold = d;
    // Residual degrees only decrease, so a single ascending scan always picks
    // the smallest-id eligible pivot.
    for (Vertex u = 0; u < n; ++u) {
        if (!alive[u] || residual[u] < d) {
            continue;
        }
        std::vector<Vertex> cluster{u};
        for (Vertex v : g.neighbors(u)) {
            if (alive[v]) {
                cluster.push_back(v);
            }
        }
        for (Vertex x : cluster) {
            remove(x);
        }
        out.clusters.push_back(std::move(cluster));
    }

    const std::size_t core_count = out.clusters.size();
    for (std::size_t i = 0; i < core_count; ++i) {
        std::vector<Vertex> absorbed;
        for (Vertex x : out.clusters[i]) {
            for (Vertex y : g.neighbors(x)) {
                if (alive[y]) {
                    alive[y] = 0;
                    absorbed.push_back(y);
                }
            }
        }
        auto& cluster = out.clusters[i];
        cluster.insert(cluster.end(), absorbed.begin(), absorbed.end());
        std::sort(cluster.begin(), cluster.end());
    }

    for (Vertex u = 0; u < n; ++u) {
        if (alive[u]) {
            out.remainder.push_back(u);
        }
    }
    return out;
}

Decomposition split_clusters(const Decomposition& dec, std::size_t d) {
    Decomposition out;
    out.threshold = dec.threshold;
    out.remainder = dec.remainder;
    const std::size_t cap = 2 * (d + 1);
    for (const auto& cluster : dec.clusters) {
        const std::size_t s = cluster.size();
        if (s <= cap) {
            out.clusters.push_back(cluster);
            continue;
        }
        const std::size_t parts = s / (d + 1);
        std::size_t begin = 0;
        for (std::size_t p = 0; p < parts; ++p) {
            const std::size_t end = (s * (p + 1)) / parts;
            out.clusters.emplace_back(cluster.begin() + static_cast<std::ptrdiff_t>(begin),
                                      cluster.begin() + static_cast<std::ptrdiff_t>(end));
            begin = end;
        }
    }
    return out;
}

} // namespace apsp
