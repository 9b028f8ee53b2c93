#ifndef APSP_MATMUL_HPP
#define APSP_MATMUL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apsp/types.hpp"

namespace apsp {

/*
 * Boolean matrix with each row packed 64 columns per word. Bits beyond
 * `cols` in the last word of a row are always zero.
 */
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols);

    static BoolMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(std::size_t r, std::size_t c, bool value = true) {
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        auto& w = bits_[r * words_ + (c >> 6)];
        w = value ? (w | bit) : (w & ~bit);
    }

    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

    BoolMatrix transpose() const;
    bool any() const;

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// C[i,j] = OR_k A[i,k] AND B[k,j].
BoolMatrix bool_mm(const BoolMatrix& a, const BoolMatrix& b);

using IntMatrix = Dense<std::int64_t>;

/// Ring product over int64. `entry_bound` declares max |entry| of both
/// operands; it must keep inner * bound^2 inside the accumulator.
IntMatrix int_mm(const IntMatrix& a, const IntMatrix& b, std::int64_t entry_bound);

/*
 * Arbitrary-precision nonnegative integer over 64-bit limbs (little endian,
 * no trailing zero limbs). Supports what the packed-polynomial products
 * need: sums, products, single-bit offsets and digit-field extraction.
 */
class WideInt {
public:
    WideInt() = default;
    explicit WideInt(std::uint64_t value);

    /// 2^bit.
    static WideInt power_of_two(std::size_t bit);

    bool is_zero() const { return limbs_.empty(); }
    /// Exponent e if the value is exactly 2^e.
    std::optional<std::size_t> log2_exact() const;
    std::size_t bit_length() const;

    /// Bits [offset, offset + width) as an integer; width <= 64.
    std::uint64_t field(std::size_t offset, std::size_t width) const;

    /// Adds 2^bit.
    void add_power_of_two(std::size_t bit);
    /// Adds value * 2^shift.
    void add_shifted(const WideInt& value, std::size_t shift);
    /// Adds a * b.
    void add_product(const WideInt& a, const WideInt& b);

    WideInt& operator+=(const WideInt& other);
    friend WideInt operator+(WideInt a, const WideInt& b) { return a += b; }
    friend WideInt operator*(const WideInt& a, const WideInt& b);

    std::optional<std::uint64_t> to_uint64() const;
    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

    friend bool operator==(const WideInt&, const WideInt&) = default;

private:
    void add_at_limb(std::size_t limb, std::uint64_t value);
    void trim();

    std::vector<std::uint64_t> limbs_;
};

struct WideIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<WideInt> entries;  // row-major
    std::size_t bit_limit = 0;     // caller-declared bound on entry bit length; 0 = unchecked

    WideIntMatrix() = default;
    WideIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    WideInt& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const WideInt& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Exact product over arbitrary-precision integers. Monomial (power of two)
/// entries are multiplied by bit offset.
WideIntMatrix wideint_mm(const WideIntMatrix& a, const WideIntMatrix& b);

/// Bits per packed digit: the smallest b with 2^b > inner_dim, so digit sums
/// of at most `inner_dim` unit terms never carry into the next digit.
std::size_t packing_radix_bits(std::size_t inner_dim);

/*
 * Predicted cost of an n1 x n2 by n2 x n3 product. Three surrogates:
 * classical (n1 n2 n3), square exponent omega (blocked into min-dimension
 * squares), and a table of rectangular exponents omega(g1, g2, g3) on a
 * uniform grid over [0,1]^3, interpolated trilinearly.
 */
class MMCostModel {
public:
    static MMCostModel classical();
    static MMCostModel square(double omega);
    /// `grid[i][j][l]` holds omega(i/steps, j/steps, l/steps); steps >= 1.
    static MMCostModel table(std::size_t steps, std::vector<double> grid);

    /// omega(g1, g2, g3) under this model.
    double exponent(double g1, double g2, double g3) const;
    /// Square exponent omega(1,1,1).
    double omega() const { return exponent(1.0, 1.0, 1.0); }

    double predict(double n1, double n2, double n3) const;

private:
    enum class Kind { Classical, Square, Table };
    Kind kind_ = Kind::Classical;
    double omega_ = 3.0;
    std::size_t steps_ = 0;
    std::vector<double> grid_;
};

double predict_cost(const MMCostModel& model, double n1, double n2, double n3);

} // namespace apsp

#endif
