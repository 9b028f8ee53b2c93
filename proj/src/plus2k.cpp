#include <cmath>
#include <string>

#include "apsp/apsp.hpp"
#include "descent.hpp"

namespace apsp {

std::vector<std::size_t> generalize_thresholds(std::size_t delta, std::size_t k) {
    if (k < 2) {
        throw InputError("generalize_to_k needs k >= 2 (got k=" + std::to_string(k) + ")");
    }
    if (delta < 1) {
        throw InputError("generalize_to_k needs delta >= 1");
    }
    std::vector<std::size_t> out(k, 1);
    for (std::size_t i = 1; i + 1 < k; ++i) {
        const double x = std::pow(static_cast<double>(delta), static_cast<double>(i) / static_cast<double>(k - 1));
        out[i] = std::max(out[i - 1], std::min(delta, static_cast<std::size_t>(std::ceil(x - 1e-9))));
    }
    out[k - 1] = delta;
    return out;
}

EstimateMatrix generalize_to_k(const Graph& g, std::span<const Vertex> hitting, std::size_t delta,
                               const EstimateMatrix& from_hitting, std::size_t k, std::size_t D) {
    const std::vector<std::size_t> d = generalize_thresholds(delta, k);
    if (delta > D) {
        throw InputError("generalize_to_k needs delta <= D");
    }
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> top(hitting.begin(), hitting.end());
    if (!covers_high_degree(g, top, delta)) {
        throw InputError("generalize_to_k: U does not hit every vertex of degree >= delta");
    }
    if (from_hitting.rows != top || from_hitting.num_cols() != n) {
        throw InputError("generalize_to_k: estimates must be labeled U x V");
    }

    std::vector<std::vector<Vertex>> levels(k);
    levels[0] = iota_vertices(n);
    for (std::size_t i = 1; i + 1 < k; ++i) {
        if (d[i] <= n) {
            levels[i] = greedy_hitting_set(g, d[i]).vertices;
        }
    }
    levels[k - 1] = top;

    EstimateMatrix est = DistanceMatrix::square(n);
    std::vector<dist_t> row(n);
    for (std::size_t r = 0; r < top.size(); ++r) {
        for (std::size_t v = 0; v < n; ++v) {
            row[v] = from_hitting.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(v));
        }
        detail::merge_symmetric(est.values, top[r], row);
    }
    detail::descend(g, levels, d, est.values);
    detail::finalize_estimates(est.values);
    return est;
}

} // namespace apsp
