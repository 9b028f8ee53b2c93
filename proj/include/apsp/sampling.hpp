#ifndef APSP_SAMPLING_HPP
#define APSP_SAMPLING_HPP

#include <cstddef>
#include <vector>

#include "apsp/graph.hpp"

namespace apsp {

/// Vertex set S such that every vertex of degree >= threshold has a neighbor in S.
struct HittingSet {
    std::vector<Vertex> vertices;  // sorted
    std::size_t threshold = 0;
};

/*
 * Greedy construction: repeatedly take the vertex adjacent to the most
 * still-uncovered high-degree vertices (ties to the smallest id). Since every
 * target has at least `d` candidate neighbors, the greedy bound gives
 * |S| = O(n log n / d). Deterministic. Requires 1 <= d <= n.
 */
HittingSet greedy_hitting_set(const Graph& g, std::size_t d);

/// True iff every vertex of degree >= threshold has a neighbor in `set`.
bool covers_high_degree(const Graph& g, std::span<const Vertex> set, std::size_t threshold);

/// Clusters H_1..H_h of weak diameter <= 4 plus a remainder of low-degree vertices.
struct Decomposition {
    std::vector<std::vector<Vertex>> clusters;  // each sorted
    std::vector<Vertex> remainder;              // sorted
    std::size_t threshold = 0;

    std::size_t num_clusters() const { return clusters.size(); }
    /// Membership mask over V for the remainder.
    std::vector<char> remainder_mask(std::size_t n) const;
};

/*
 * Two-phase decomposition. Phase 1 scans vertices by ascending id and
 * extracts the closed residual neighborhood of every vertex whose residual
 * degree is still >= d. Phase 2 lets each cluster, in creation order, absorb
 * its residual neighbors. Leftovers form the remainder, all of degree < d in g.
 * Runs in O(n + m).
 */
Decomposition decompose(const Graph& g, std::size_t d);

/// Splits every cluster larger than 2(d+1) into floor(s/(d+1)) balanced
/// contiguous parts, so all sizes land in (d, 2(d+1)].
Decomposition split_clusters(const Decomposition& dec, std::size_t d);

} // namespace apsp

#endif
