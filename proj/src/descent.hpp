#ifndef APSP_SRC_DESCENT_HPP
#define APSP_SRC_DESCENT_HPP

#include <vector>

#include "apsp/graph.hpp"

namespace apsp::detail {

/*
 * Descending search rounds shared by the sparse algorithm and the +2k lift.
 * levels[i] is S_i, thresholds[i] is d_i, for i = 0..top. `est` is a
 * symmetric n x n working table already holding valid upper bounds for rows
 * in levels[top]. Each round i = top-1..0 searches from every u in S_i over
 * E_i plus virtual edges u -> v weighted est(u, v), and writes results back
 * symmetrically.
 */
void descend(const Graph& g, const std::vector<std::vector<Vertex>>& levels,
             const std::vector<std::size_t>& thresholds, Dense<dist_t>& est);

/// E_i: edges touching a vertex of degree < threshold, plus, for each vertex
/// of degree >= threshold, one edge to its smallest-id neighbor in `hitting`.
WeightedGraph bridged_edge_set(const Graph& g, std::size_t threshold, const std::vector<Vertex>& hitting);

/// Lowers est(u,v) and est(v,u) to `row[v]` wherever smaller.
void merge_symmetric(Dense<dist_t>& est, Vertex u, const std::vector<dist_t>& row);

void finalize_estimates(Dense<dist_t>& est);

} // namespace apsp::detail

#endif
