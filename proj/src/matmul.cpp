#include "apsp/matmul.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace apsp {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(i, i);
    }
    return out;
}

BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* src = row(r);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = src[w];
            while (word != 0) {
                const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
                out.set(c, r);
                word &= word - 1;
            }
        }
    }
    return out;
}

bool BoolMatrix::any() const {
    return std::any_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w != 0; });
}

namespace {

constexpr std::size_t kColumnBlock = 64;

} // namespace

BoolMatrix bool_mm(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InputError("bool_mm: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
    }
    BoolMatrix c(a.rows(), b.cols());
    if (a.cols() == 0) {
        return c;
    }
    const BoolMatrix bt = b.transpose();
    const std::size_t words = a.words_per_row();
    // Column-blocked so a tile of B^T rows stays cached across all rows of A.
    for (std::size_t j0 = 0; j0 < b.cols(); j0 += kColumnBlock) {
        const std::size_t j1 = std::min(b.cols(), j0 + kColumnBlock);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const std::uint64_t* ar = a.row(i);
            for (std::size_t j = j0; j < j1; ++j) {
                const std::uint64_t* br = bt.row(j);
                for (std::size_t w = 0; w < words; ++w) {
                    if ((ar[w] & br[w]) != 0) {
                        c.set(i, j);
                        break;
                    }
                }
            }
        }
    }
    return c;
}

IntMatrix int_mm(const IntMatrix& a, const IntMatrix& b, std::int64_t entry_bound) {
    if (a.cols() != b.rows()) {
        throw InputError("int_mm: inner dimensions differ");
    }
    if (entry_bound < 0) {
        throw InputError("int_mm: negative entry bound");
    }
    const __int128 worst = static_cast<__int128>(entry_bound) * entry_bound * std::max<Eigen::Index>(a.cols(), 1);
    if (worst > std::numeric_limits<std::int64_t>::max()) {
        throw InputError("int_mm: declared bound overflows the accumulator");
    }
    auto within = [entry_bound](const IntMatrix& m) {
        return m.size() == 0 || m.cwiseAbs().maxCoeff() <= entry_bound;
    };
    if (!within(a) || !within(b)) {
        throw InputError("int_mm: entry exceeds declared bound");
    }
    return a * b;
}

std::size_t packing_radix_bits(std::size_t inner_dim) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::bit_width(inner_dim)));
}

MMCostModel MMCostModel::classical() {
    return MMCostModel{};
}

MMCostModel MMCostModel::square(double omega) {
    if (!(omega >= 2.0 && omega <= 3.0)) {
        throw InputError("square cost model: omega must lie in [2, 3]");
    }
    MMCostModel m;
    m.kind_ = Kind::Square;
    m.omega_ = omega;
    return m;
}

MMCostModel MMCostModel::table(std::size_t steps, std::vector<double> grid) {
    const std::size_t side = steps + 1;
    if (steps == 0 || grid.size() != side * side * side) {
        throw InputError("exponent table must have (steps+1)^3 entries");
    }
    MMCostModel m;
    m.kind_ = Kind::Table;
    m.steps_ = steps;
    m.grid_ = std::move(grid);
    return m;
}

double MMCostModel::exponent(double g1, double g2, double g3) const {
    switch (kind_) {
    case Kind::Classical:
        return g1 + g2 + g3;
    case Kind::Square:
        return g1 + g2 + g3 - (3.0 - omega_) * std::min({g1, g2, g3});
    case Kind::Table:
        break;
    }
    const std::size_t side = steps_ + 1;
    auto at = [&](std::size_t i, std::size_t j, std::size_t l) { return grid_[(i * side + j) * side + l]; };
    std::array<std::size_t, 3> lo{};
    std::array<double, 3> frac{};
    const std::array<double, 3> g{g1, g2, g3};
    for (std::size_t a = 0; a < 3; ++a) {
        const double x = std::clamp(g[a], 0.0, 1.0) * static_cast<double>(steps_);
        lo[a] = std::min(static_cast<std::size_t>(x), steps_ - 1);
        frac[a] = x - static_cast<double>(lo[a]);
    }
    double acc = 0.0;
    for (std::size_t corner = 0; corner < 8; ++corner) {
        double weight = 1.0;
        std::array<std::size_t, 3> idx{};
        for (std::size_t a = 0; a < 3; ++a) {
            const bool up = (corner >> a) & 1u;
            idx[a] = lo[a] + (up ? 1 : 0);
            weight *= up ? frac[a] : 1.0 - frac[a];
        }
        acc += weight * at(idx[0], idx[1], idx[2]);
    }
    return acc;
}

double MMCostModel::predict(double n1, double n2, double n3) const {
    n1 = std::max(n1, 1.0);
    n2 = std::max(n2, 1.0);
    n3 = std::max(n3, 1.0);
    switch (kind_) {
    case Kind::Classical:
        return n1 * n2 * n3;
    case Kind::Square: {
        const double m = std::min({n1, n2, n3});
        return (n1 / m) * (n2 / m) * (n3 / m) * std::pow(m, omega_);
    }
    case Kind::Table:
        break;
    }
    const double big = std::max({n1, n2, n3});
    if (big <= 1.0) {
        return 1.0;
    }
    const double lb = std::log(big);
    return std::pow(big, exponent(std::log(n1) / lb, std::log(n2) / lb, std::log(n3) / lb));
}

double predict_cost(const MMCostModel& model, double n1, double n2, double n3) {
    return model.predict(n1, n2, n3);
}

} // namespace apsp
