#ifndef APSP_APSP_HPP
#define APSP_APSP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apsp/graph.hpp"
#include "apsp/matmul.hpp"
#include "apsp/minplus.hpp"
#include "apsp/sampling.hpp"

namespace apsp {

/// Exact distances by one BFS per vertex.
DistanceMatrix exact_apsp_oracle(const Graph& g);

/// d_i = ceil((m/n)^(i/(k+1))) for i = 0..k.
std::vector<std::size_t> dhz_default_thresholds(const Graph& g, std::size_t k);

/*
 * Sparse +2k APSP. Hitting sets S_i for degree >= d_i, exact BFS from S_k,
 * then for i = k-1 .. 0 a Dijkstra search from every u in S_i over E_i (edges
 * touching a vertex of degree < d_{i+1}, plus one edge from each heavier
 * vertex into S_{i+1}) with the current estimates out of u as extra edges.
 * Guarantees d <= est <= d + 2k for every pair.
 */
EstimateMatrix dhz_sparse_apsp(const Graph& g, std::size_t k,
                               std::optional<std::vector<std::size_t>> thresholds = std::nullopt);

/// dhz_sparse_apsp on low_degree_edge_subgraph(g, d): +2k for pairs with a
/// shortest path through vertices of degree <= d only.
EstimateMatrix sparse_restricted_apsp(const Graph& g, std::size_t d, std::size_t k);

/*
 * Extends estimates known on v x (V \ R) to v x V. The search graph holds
 * every edge incident to R plus an edge v -> w of weight est(v, w) for each
 * w outside R with a finite estimate.
 */
class RemainderExtender {
public:
    RemainderExtender(const Graph& g, std::span<const Vertex> remainder);

    /// `known` has length n; entries on R are ignored.
    std::vector<dist_t> extend(Vertex v, std::span<const dist_t> known) const;

    std::size_t num_edges() const { return edges_.num_arcs() / 2; }

private:
    std::vector<char> in_remainder_;
    WeightedGraph edges_;
};

/// Single-source form. Every remainder vertex must have degree < d.
std::vector<dist_t> extend_to_all(const Graph& g, Vertex v, std::span<const Vertex> remainder,
                                  std::span<const dist_t> known, std::size_t d);

/*
 * Degree-class +2 routines. For 1 <= d < D they return est with
 *   d(u,v) <= est(u,v) <= d_D(u,v) + 2
 * where d_D is the shortest walk whose maximum vertex degree (in g) lies in
 * [D, 2D]. Distances from the D-hitting set are exact BFS distances in g.
 */
EstimateMatrix plus2_percluster(const Graph& g, std::size_t D, std::size_t d);

/// Rows restricted to `rows`; the result is labeled rows x V.
EstimateMatrix plus2_from_subset(const Graph& g, std::span<const Vertex> rows, std::size_t D, std::size_t d);

/// All clusters in one grouped (min,+) product, then two extension passes.
EstimateMatrix plus2_grouped(const Graph& g, std::size_t D, std::size_t d, std::size_t q, std::uint64_t seed,
                             GroupedStats* stats = nullptr);

/*
 * Lifts +2 estimates on U x V to +2k on V x V. Thresholds d_i =
 * ceil(delta^(i/(k-1))), hitting sets S_i at d_i for 1 <= i <= k-2, S_{k-1}
 * = U, S_0 = V, then the same descending searches as the sparse algorithm.
 * U must hit the neighborhood of every vertex of degree >= delta; k >= 2.
 */
EstimateMatrix generalize_to_k(const Graph& g, std::span<const Vertex> hitting, std::size_t delta,
                               const EstimateMatrix& from_hitting, std::size_t k, std::size_t D);

std::vector<std::size_t> generalize_thresholds(std::size_t delta, std::size_t k);

// ---------------------------------------------------------------------------
// Drivers

enum class Branch { Auto, Sparse, Matrix };
enum class Plus2Variant { Warmup, Grouped };

/*
 * Parameter policy. With no overrides, d, q, delta and the sparse/matrix
 * crossover come from the exponent formulas evaluated under `model`; the
 * branch for each degree class is whichever the model predicts cheaper.
 */
struct Policy {
    MMCostModel model = MMCostModel::classical();
    Branch branch = Branch::Auto;
    Plus2Variant variant = Plus2Variant::Grouped;
    std::optional<std::size_t> switch_D;  // classes with D >= switch_D take the matrix branch
    std::optional<std::size_t> d;
    std::optional<std::size_t> q;
    std::optional<std::size_t> delta;
    std::uint64_t seed = 1;
};

struct ClassPlan {
    std::size_t D = 1;
    bool matrix = false;
    std::size_t d = 1;
    std::size_t q = 1;
    std::size_t delta = 1;
    double sparse_cost = 0.0;
    double matrix_cost = 0.0;
};

ClassPlan plan_plus2_class(std::size_t n, std::size_t D, const Policy& policy);
ClassPlan plan_plus2k_class(std::size_t n, std::size_t k, std::size_t D, const Policy& policy);

/// x solving 1 + x = omega(1 - (k-1)x/(k+1), 1 - x, kx/(k+1)) under `model`.
double plus2k_balance_exponent(std::size_t k, const MMCostModel& model);

struct DriverTrace {
    std::vector<ClassPlan> classes;  // only classes that were run
};

/// D = 1, 2, 4, ..., 2^ceil(log2 n).
std::vector<std::size_t> degree_classes(std::size_t n);

/// +2 for every pair.
EstimateMatrix plus2_apsp(const Graph& g, const Policy& policy = {}, DriverTrace* trace = nullptr);

/// +2k for every pair, k >= 2.
EstimateMatrix plus2k_apsp(const Graph& g, std::size_t k, const Policy& policy = {}, DriverTrace* trace = nullptr);

} // namespace apsp

#endif
