#ifndef APSP_MINPLUS_HPP
#define APSP_MINPLUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "apsp/types.hpp"

namespace apsp {

/*
 * Tropical (min,+) products C[i,j] = min_k A[i,k] + B[k,j] over integer
 * matrices with kInf<Scalar> as the absorbing sentinel. Every routine below
 * returns exactly the brute-force product; they differ in how they get there.
 *
 * Instantiated for std::int64_t and dist_t.
 */
template <class Scalar>
using MinPlusMatrix = Dense<Scalar>;

/// Triple loop. INF + x = INF, and an empty minimum is INF.
template <class Scalar>
MinPlusMatrix<Scalar> minplus_bruteforce(const MinPlusMatrix<Scalar>& a, const MinPlusMatrix<Scalar>& b);

/// Bounded entries: every finite entry in [0, bound]. Computed from boolean
/// products of the value-indicator matrices, one per target sum 0..2*bound.
template <class Scalar>
MinPlusMatrix<Scalar> minplus_bounded(const MinPlusMatrix<Scalar>& a, const MinPlusMatrix<Scalar>& b,
                                      std::int64_t bound);

/*
 * Rows of B have bounded spread: max_j B[k,j] - min_j B[k,j] <= bound over
 * finite entries. A is arbitrary. Shift each B row to start at zero, push the
 * shift into A, drop A entries that cannot win, and hand the residual
 * bounded-entry problem to minplus_bounded.
 */
template <class Scalar>
MinPlusMatrix<Scalar> minplus_shifted(const MinPlusMatrix<Scalar>& a, const MinPlusMatrix<Scalar>& b,
                                      std::int64_t bound);

/*
 * A is (groups*group_size) x inner, B is inner x (groups*group_size). Rows of
 * A (columns of B) come in contiguous groups; inside a group, for every k,
 * entries are all INF or all finite and within `spread` of each other.
 */
template <class Scalar>
struct GroupedInstance {
    MinPlusMatrix<Scalar> a;
    MinPlusMatrix<Scalar> b;
    std::size_t group_size = 1;
    std::size_t groups = 0;
    std::int64_t spread = 1;   // L
    std::size_t density = 1;   // q: larger q means larger primes, fewer false positives

    std::size_t inner() const { return static_cast<std::size_t>(a.cols()); }
    std::size_t group_of(std::size_t index) const { return index / group_size; }
};

/// Sentinel for absent entries in the int64 quotient/remainder tables.
inline constexpr std::int64_t kAbsent = kInf<std::int64_t>;

/*
 * Coarse/fine split of a grouped instance:
 *   A[i,k] = L*Aq[g(i),k] + Ar[i,k],  0 <= Ar < 2L
 *   B[k,j] = L*Bq[k,g(j)] + Br[k,j],  0 <= Br < 2L
 * and Cq = Aq * Bq (tropical, brute force), so 0 <= C - L*Cq < 4L.
 */
struct QuotientRemainder {
    Dense<std::int64_t> a_quot;  // groups x inner
    Dense<std::int64_t> a_rem;   // rows x inner
    Dense<std::int64_t> b_quot;  // inner x groups
    Dense<std::int64_t> b_rem;   // inner x cols
    Dense<std::int64_t> c_quot;  // groups x groups
};

template <class Scalar>
QuotientRemainder build_quotient_remainder(const GroupedInstance<Scalar>& inst);

struct GroupedOptions {
    /// Rounds = max(1, ceil(rounds_factor * log2(groups))).
    double rounds_factor = 2.0;
    /// Per group pair and round, at most budget_factor * ceil(inner / q)
    /// false positives are subtracted; heavier pairs wait for the next prime.
    std::size_t budget_factor = 8;
    /// Overrides the computed budget when set.
    std::optional<std::size_t> budget;
};

/// One decoded term of the reduced product polynomial.
struct DecodedTerm {
    std::size_t i;
    std::size_t j;
    std::int64_t quotient_sum;   // Aq + Bq recovered from the residue window
    std::int64_t remainder_sum;  // Ar + Br
    std::uint64_t count;         // witnesses carrying this term
    std::uint64_t prime;
};

struct GroupedStats {
    std::size_t rounds_run = 0;
    std::vector<std::uint64_t> primes;
    std::size_t pairs_total = 0;
    std::size_t pairs_by_polynomial = 0;
    std::size_t pairs_by_fallback = 0;
    std::size_t false_positives_subtracted = 0;
    std::size_t deferrals = 0;
    /// Filled only when `record_terms` is set.
    bool record_terms = false;
    std::vector<DecodedTerm> terms;
};

/// Candidate primes for values bounded by `magnitude`: all primes in
/// [lo, 2*lo] with lo = max(7, q * ceil(log2(2U+1))).
std::vector<std::uint64_t> prime_window(std::int64_t magnitude, std::size_t density);

/// Residue offset r in {-3..3} with value = r (mod p), if any.
std::optional<int> residue_window(std::int64_t value, std::uint64_t p);

/*
 * Exact (min,+) product of a grouped instance via the quotient/remainder
 * split and a packed bivariate polynomial product with exponents reduced mod
 * a random prime. False positives are counted and subtracted exactly; group
 * pairs over the false-positive budget retry under a fresh prime and, after
 * the last round, fall back to brute force. The seed changes running time
 * only, never the result.
 */
template <class Scalar>
MinPlusMatrix<Scalar> minplus_grouped(const GroupedInstance<Scalar>& inst, std::uint64_t seed,
                                      const GroupedOptions& options = {}, GroupedStats* stats = nullptr);

} // namespace apsp

#endif
