#include <algorithm>
#include <string>

#include "apsp/apsp.hpp"
#include "descent.hpp"

namespace apsp {

RemainderExtender::RemainderExtender(const Graph& g, std::span<const Vertex> remainder)
    : in_remainder_(g.num_vertices(), 0) {
    for (Vertex r : remainder) {
        in_remainder_[r] = 1;
    }
    std::vector<Edge> edges;
    for (Vertex r : remainder) {
        for (Vertex v : g.neighbors(r)) {
            if (!in_remainder_[v] || r < v) {
                edges.emplace_back(r, v);
            }
        }
    }
    edges_ = WeightedGraph::unit(g.num_vertices(), edges);
}

std::vector<dist_t> RemainderExtender::extend(Vertex v, std::span<const dist_t> known) const {
    std::vector<dist_t> shortcuts(known.begin(), known.end());
    for (std::size_t w = 0; w < shortcuts.size(); ++w) {
        if (in_remainder_[w]) {
            shortcuts[w] = INF;
        }
    }
    return dijkstra_overlay(edges_, v, shortcuts);
}

std::vector<dist_t> extend_to_all(const Graph& g, Vertex v, std::span<const Vertex> remainder,
                                  std::span<const dist_t> known, std::size_t d) {
    for (Vertex r : remainder) {
        if (g.degree(r) >= d) {
            throw InputError("extend_to_all: remainder vertex " + std::to_string(r) + " has degree >= d");
        }
    }
    if (known.size() != g.num_vertices()) {
        throw InputError("extend_to_all: known row must have length n");
    }
    return RemainderExtender(g, remainder).extend(v, known);
}

namespace {

void check_class_params(const Graph& g, std::size_t D, std::size_t d) {
    if (d < 1 || d >= D) {
        throw InputError("degree-class routine needs 1 <= d < D (got d=" + std::to_string(d) +
                         ", D=" + std::to_string(D) + ")");
    }
    if (d > g.num_vertices()) {
        throw InputError("degree-class routine needs d <= n");
    }
}

/// Exact distances from the D-hitting set, plus the split cluster decomposition at d.
struct ClassSkeleton {
    DistanceMatrix from_hitting;  // |S| x n
    Decomposition dec;
};

ClassSkeleton build_skeleton(const Graph& g, std::size_t D, std::size_t d) {
    std::vector<Vertex> hitting;
    if (D <= g.num_vertices()) {
        hitting = greedy_hitting_set(g, D).vertices;
    }
    return {multi_bfs(g, hitting), split_clusters(decompose(g, d), d)};
}

constexpr std::int64_t kClusterSpread = 4;

Dense<dist_t> select_columns(const Dense<dist_t>& m, std::span<const Vertex> cols) {
    Dense<dist_t> out(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out.col(static_cast<Eigen::Index>(c)) = m.col(cols[c]);
    }
    return out;
}

} // namespace

EstimateMatrix plus2_from_subset(const Graph& g, std::span<const Vertex> rows, std::size_t D, std::size_t d) {
    check_class_params(g, D, d);
    const std::size_t n = g.num_vertices();
    for (Vertex u : rows) {
        if (u >= n) {
            throw InputError("plus2_from_subset: row vertex out of range");
        }
    }
    const ClassSkeleton sk = build_skeleton(g, D, d);
    const Dense<dist_t>& dsv = sk.from_hitting.values;

    EstimateMatrix est(std::vector<Vertex>(rows.begin(), rows.end()), iota_vertices(n));
    const Dense<dist_t> a = select_columns(dsv, rows).transpose();  // |U| x |S|
    for (const auto& cluster : sk.dec.clusters) {
        if (dsv.rows() == 0) {
            break;
        }
        const Dense<dist_t> c = minplus_shifted<dist_t>(a, select_columns(dsv, cluster), kClusterSpread);
        for (std::size_t t = 0; t < cluster.size(); ++t) {
            est.values.col(cluster[t]) = c.col(static_cast<Eigen::Index>(t));
        }
    }

    const RemainderExtender extender(g, sk.dec.remainder);
    std::vector<dist_t> known(n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto er = static_cast<Eigen::Index>(r);
        for (std::size_t v = 0; v < n; ++v) {
            known[v] = est.values(er, static_cast<Eigen::Index>(v));
        }
        const auto full = extender.extend(rows[r], known);
        for (std::size_t v = 0; v < n; ++v) {
            est.values(er, static_cast<Eigen::Index>(v)) = full[v];
        }
    }
    return est;
}

EstimateMatrix plus2_percluster(const Graph& g, std::size_t D, std::size_t d) {
    return plus2_from_subset(g, iota_vertices(g.num_vertices()), D, d);
}

EstimateMatrix plus2_grouped(const Graph& g, std::size_t D, std::size_t d, std::size_t q, std::uint64_t seed,
                             GroupedStats* stats) {
    check_class_params(g, D, d);
    if (q < 1) {
        throw InputError("plus2_grouped: q must be >= 1");
    }
    const std::size_t n = g.num_vertices();
    const ClassSkeleton sk = build_skeleton(g, D, d);
    const Dense<dist_t>& dsv = sk.from_hitting.values;
    const auto& clusters = sk.dec.clusters;

    // Clusters become equal-size groups; short clusters repeat their last member.
    std::size_t group_size = 1;
    for (const auto& c : clusters) {
        group_size = std::max(group_size, c.size());
    }
    std::vector<Vertex> members;
    std::vector<char> padding;
    for (const auto& c : clusters) {
        for (std::size_t t = 0; t < group_size; ++t) {
            members.push_back(c[std::min(t, c.size() - 1)]);
            padding.push_back(t >= c.size() ? 1 : 0);
        }
    }

    EstimateMatrix est = DistanceMatrix::square(n);
    if (!clusters.empty() && dsv.rows() > 0) {
        GroupedInstance<dist_t> inst;
        inst.a = select_columns(dsv, members).transpose();
        inst.b = inst.a.transpose();
        inst.group_size = group_size;
        inst.groups = clusters.size();
        inst.spread = kClusterSpread;
        inst.density = q;
        const Dense<dist_t> core = minplus_grouped(inst, seed, {}, stats);
        for (std::size_t x = 0; x < members.size(); ++x) {
            if (padding[x]) {
                continue;
            }
            for (std::size_t y = 0; y < members.size(); ++y) {
                if (!padding[y]) {
                    est.values(members[x], members[y]) = core(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
                }
            }
        }
    }

    const RemainderExtender extender(g, sk.dec.remainder);
    const std::vector<char> in_remainder = sk.dec.remainder_mask(n);
    std::vector<dist_t> known(n);
    auto load_row = [&](Vertex u) {
        for (std::size_t v = 0; v < n; ++v) {
            known[v] = est.values(u, static_cast<Eigen::Index>(v));
        }
    };

    // (V\R) x (V\R) -> (V\R) x V, mirrored to V x (V\R)
    for (Vertex u = 0; u < n; ++u) {
        if (in_remainder[u]) {
            continue;
        }
        load_row(u);
        detail::merge_symmetric(est.values, u, extender.extend(u, known));
    }
    // V x (V\R) -> V x V
    for (Vertex r : sk.dec.remainder) {
        load_row(r);
        const auto full = extender.extend(r, known);
        for (std::size_t v = 0; v < n; ++v) {
            est.values(r, static_cast<Eigen::Index>(v)) = std::min(est.values(r, static_cast<Eigen::Index>(v)), full[v]);
        }
    }
    return est;
}

} // namespace apsp
