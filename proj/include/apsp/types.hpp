#ifndef APSP_TYPES_HPP
#define APSP_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

namespace apsp {

using Vertex = std::uint32_t;

/// Distances and estimates. INF is the maximum representable value.
using dist_t = std::uint32_t;

template <class Scalar>
inline constexpr Scalar kInf = std::numeric_limits<Scalar>::max();

inline constexpr dist_t INF = kInf<dist_t>;

template <class Scalar>
constexpr bool is_inf(Scalar x) {
    return x == kInf<Scalar>;
}

/// Tropical addition: INF absorbs, and any overflow saturates to INF.
template <class Scalar>
constexpr Scalar sat_add(Scalar a, Scalar b) {
    static_assert(std::is_integral_v<Scalar>);
    if (is_inf(a) || is_inf(b)) {
        return kInf<Scalar>;
    }
    Scalar out{};
    if (__builtin_add_overflow(a, b, &out) || is_inf(out)) {
        return kInf<Scalar>;
    }
    return out;
}

/// Row-major dense matrix, the storage type for every distance table.
template <class Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Scalar>
Dense<Scalar> inf_matrix(Eigen::Index rows, Eigen::Index cols) {
    return Dense<Scalar>::Constant(rows, cols, kInf<Scalar>);
}

/*
 * A rectangular table of distances (or distance estimates) whose rows and
 * columns are labeled by vertex ids.
 */
struct DistanceMatrix {
    std::vector<Vertex> rows;
    std::vector<Vertex> cols;
    Dense<dist_t> values;

    DistanceMatrix() = default;
    DistanceMatrix(std::vector<Vertex> row_labels, std::vector<Vertex> col_labels);

    /// n x n table over V = {0..n-1}, filled with INF.
    static DistanceMatrix square(std::size_t n);

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return cols.size(); }
    dist_t operator()(std::size_t r, std::size_t c) const { return values(r, c); }
    dist_t& operator()(std::size_t r, std::size_t c) { return values(r, c); }
};

/// Estimates over V x V (or U x V) produced by the approximation algorithms.
using EstimateMatrix = DistanceMatrix;

std::vector<Vertex> iota_vertices(std::size_t n);

/// Thrown on precondition violations of public operations.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace apsp

#endif
