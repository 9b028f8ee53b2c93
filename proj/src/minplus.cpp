#include "apsp/minplus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "apsp/matmul.hpp"

namespace apsp {

namespace {

template <class Scalar>
std::int64_t widen(Scalar x) {
    return is_inf(x) ? kAbsent : static_cast<std::int64_t>(x);
}

template <class Scalar>
Scalar narrow(std::int64_t x) {
    return x == kAbsent ? kInf<Scalar> : static_cast<Scalar>(x);
}

template <class Scalar>
Dense<std::int64_t> widen_matrix(const Dense<Scalar>& m) {
    return m.unaryExpr([](Scalar x) { return widen(x); });
}

template <class Scalar>
Dense<Scalar> narrow_matrix(const Dense<std::int64_t>& m) {
    return m.unaryExpr([](std::int64_t x) { return narrow<Scalar>(x); });
}

std::int64_t floor_div(std::int64_t x, std::int64_t d) {
    return x >= 0 ? x / d : -((-x + d - 1) / d);
}

std::int64_t pos_mod(std::int64_t x, std::uint64_t p) {
    const auto m = static_cast<std::int64_t>(p);
    const std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

template <class Scalar>
void check_inner(const Dense<Scalar>& a, const Dense<Scalar>& b, const char* who) {
    if (a.cols() != b.rows()) {
        throw InputError(std::string(who) + ": inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
    }
}

} // namespace

template <class Scalar>
MinPlusMatrix<Scalar> minplus_bruteforce(const MinPlusMatrix<Scalar>& a, const MinPlusMatrix<Scalar>& b) {
    check_inner(a, b, "minplus_bruteforce");
    MinPlusMatrix<Scalar> c = inf_matrix<Scalar>(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const Scalar aik = a(i, k);
            if (is_inf(aik)) {
                continue;
            }
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                const Scalar s = sat_add(aik, b(k, j));
                if (s < c(i, j)) {
                    c(i, j) = s;
                }
            }
        }
    }
    return c;
}

template <class Scalar>
MinPlusMatrix<Scalar> minplus_bounded(const MinPlusMatrix<Scalar>& a, const MinPlusMatrix<Scalar>& b,
                                      std::int64_t bound) {
    check_inner(a, b, "minplus_bounded");
    if (bound < 0) {
        throw InputError("minplus_bounded: negative bound");
    }
    const auto values = static_cast<std::size_t>(bound) + 1;
    auto indicators = [&](const MinPlusMatrix<Scalar>& m, const char* which) {
        std::vector<BoolMatrix> out(values, BoolMatrix(static_cast<std::size_t>(m.rows()),
                                                       static_cast<std::size_t>(m.cols())));
        std::vector<char> used(values, 0);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                const Scalar x = m(r, c);
                if (is_inf(x)) {
                    continue;
                }
                const std::int64_t v = static_cast<std::int64_t>(x);
                if (v < 0 || v > bound) {
                    throw InputError(std::string("minplus_bounded: entry of ") + which + " outside [0, " +
                                     std::to_string(bound) + "]");
                }
                out[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                used[static_cast<std::size_t>(v)] = 1;
            }
        }
        return std::pair{std::move(out), std::move(used)};
    };
    auto [ia, used_a] = indicators(a, "A");
    auto [ib, used_b] = indicators(b, "B");

    MinPlusMatrix<Scalar> c = inf_matrix<Scalar>(a.rows(), b.cols());
    // Ascending target sums: the first sum that reaches (i,j) is its minimum.
    for (std::size_t sum = 0; sum <= 2 * (values - 1); ++sum) {
        const std::size_t lo = sum >= values ? sum - (values - 1) : 0;
        const std::size_t hi = std::min(sum, values - 1);
        for (std::size_t va = lo; va <= hi; ++va) {
            const std::size_t vb = sum - va;
            if (!used_a[va] || !used_b[vb]) {
                continue;
            }
            const BoolMatrix hit = bool_mm(ia[va], ib[vb]);
            for (std::size_t i = 0; i < hit.rows(); ++i) {
                for (std::size_t j = 0; j < hit.cols(); ++j) {
                    auto& cij = c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                    if (is_inf(cij) && hit.get(i, j)) {
                        cij = static_cast<Scalar>(sum);
                    }
                }
            }
        }
    }
    return c;
}

template <class Scalar>
MinPlusMatrix<Scalar> minplus_shifted(const MinPlusMatrix<Scalar>& a, const MinPlusMatrix<Scalar>& b,
                                      std::int64_t bound) {
    check_inner(a, b, "minplus_shifted");
    if (bound < 0) {
        throw InputError("minplus_shifted: negative bound");
    }
    const Eigen::Index n1 = a.rows();
    const Eigen::Index n2 = a.cols();
    const Eigen::Index n3 = b.cols();

    // Delta_k = min_j B[k,j]; B' = B - Delta per row
    std::vector<std::int64_t> delta(static_cast<std::size_t>(n2), kAbsent);
    Dense<std::int64_t> b_shift = inf_matrix<std::int64_t>(n2, n3);
    for (Eigen::Index k = 0; k < n2; ++k) {
        std::int64_t lo = kAbsent;
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (Eigen::Index j = 0; j < n3; ++j) {
            const std::int64_t x = widen(b(k, j));
            if (x != kAbsent) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
        if (lo == kAbsent) {
            continue;
        }
        if (hi - lo > bound) {
            throw InputError("minplus_shifted: row " + std::to_string(k) + " of B spans " +
                             std::to_string(hi - lo) + " > " + std::to_string(bound));
        }
        delta[static_cast<std::size_t>(k)] = lo;
        for (Eigen::Index j = 0; j < n3; ++j) {
            const std::int64_t x = widen(b(k, j));
            if (x != kAbsent) {
                b_shift(k, j) = x - lo;
            }
        }
    }

    // A' = A + Delta per column, then keep only entries within bound of the row minimum
    Dense<std::int64_t> a_shift = inf_matrix<std::int64_t>(n1, n2);
    std::vector<std::int64_t> row_min(static_cast<std::size_t>(n1), kAbsent);
    for (Eigen::Index i = 0; i < n1; ++i) {
        for (Eigen::Index k = 0; k < n2; ++k) {
            const std::int64_t x = widen(a(i, k));
            const std::int64_t dk = delta[static_cast<std::size_t>(k)];
            if (x == kAbsent || dk == kAbsent) {
                continue;
            }
            a_shift(i, k) = x + dk;
            row_min[static_cast<std::size_t>(i)] = std::min(row_min[static_cast<std::size_t>(i)], x + dk);
        }
        const std::int64_t m = row_min[static_cast<std::size_t>(i)];
        for (Eigen::Index k = 0; k < n2; ++k) {
            std::int64_t& x = a_shift(i, k);
            if (x == kAbsent) {
                continue;
            }
            x = x > m + bound ? kAbsent : x - m;
        }
    }

    Dense<std::int64_t> c = minplus_bounded<std::int64_t>(a_shift, b_shift, bound);
    for (Eigen::Index i = 0; i < n1; ++i) {
        const std::int64_t m = row_min[static_cast<std::size_t>(i)];
        if (m == kAbsent) {
            continue;
        }
        for (Eigen::Index j = 0; j < n3; ++j) {
            // a dropped entry sums to at least m + bound + 1, so larger results
            // (or INF, when the cheap rows of B are INF at j) are redone directly
            if (c(i, j) != kAbsent && c(i, j) <= bound + 1) {
                c(i, j) += m;
                continue;
            }
            std::int64_t best = kAbsent;
            for (Eigen::Index k = 0; k < n2; ++k) {
                const std::int64_t x = widen(a(i, k));
                const std::int64_t dk = delta[static_cast<std::size_t>(k)];
                if (x == kAbsent || dk == kAbsent || b_shift(k, j) == kAbsent) {
                    continue;
                }
                best = std::min(best, x + dk + b_shift(k, j));
            }
            c(i, j) = best;
        }
    }
    return narrow_matrix<Scalar>(c);
}

namespace {

template <class Scalar>
void validate_grouped(const GroupedInstance<Scalar>& inst) {
    const auto rows = static_cast<Eigen::Index>(inst.groups * inst.group_size);
    if (inst.group_size == 0) {
        throw InputError("grouped instance: group size must be >= 1");
    }
    if (inst.spread < 1) {
        throw InputError("grouped instance: spread L must be >= 1");
    }
    if (inst.density < 1) {
        throw InputError("grouped instance: q must be >= 1");
    }
    if (inst.a.rows() != rows || inst.b.cols() != rows || inst.a.cols() != inst.b.rows()) {
        throw InputError("grouped instance: expected A (hd x s) and B (s x hd)");
    }
    const Eigen::Index s = inst.a.cols();
    const auto gs = static_cast<Eigen::Index>(inst.group_size);
    auto check_group = [&](auto get, const char* which, std::size_t g, Eigen::Index k) {
        std::size_t finite = 0;
        std::int64_t lo = kAbsent;
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (Eigen::Index t = 0; t < gs; ++t) {
            const std::int64_t x = widen(get(static_cast<Eigen::Index>(g) * gs + t, k));
            if (x != kAbsent) {
                ++finite;
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
        if (finite != 0 && finite != inst.group_size) {
            throw InputError(std::string("grouped instance: ") + which + " mixes INF and finite entries in group " +
                             std::to_string(g));
        }
        if (finite != 0 && hi - lo > inst.spread) {
            throw InputError(std::string("grouped instance: ") + which + " group " + std::to_string(g) +
                             " spans " + std::to_string(hi - lo) + " > L");
        }
    };
    for (std::size_t g = 0; g < inst.groups; ++g) {
        for (Eigen::Index k = 0; k < s; ++k) {
            check_group([&](Eigen::Index i, Eigen::Index kk) { return inst.a(i, kk); }, "A", g, k);
            check_group([&](Eigen::Index j, Eigen::Index kk) { return inst.b(kk, j); }, "B", g, k);
        }
    }
}

} // namespace

template <class Scalar>
QuotientRemainder build_quotient_remainder(const GroupedInstance<Scalar>& inst) {
    validate_grouped(inst);
    const auto h = static_cast<Eigen::Index>(inst.groups);
    const auto gs = static_cast<Eigen::Index>(inst.group_size);
    const Eigen::Index s = inst.a.cols();
    const std::int64_t L = inst.spread;

    QuotientRemainder qr;
    qr.a_quot = inf_matrix<std::int64_t>(h, s);
    qr.a_rem = inf_matrix<std::int64_t>(h * gs, s);
    qr.b_quot = inf_matrix<std::int64_t>(s, h);
    qr.b_rem = inf_matrix<std::int64_t>(s, h * gs);
    for (Eigen::Index g = 0; g < h; ++g) {
        for (Eigen::Index k = 0; k < s; ++k) {
            std::int64_t amin = kAbsent;
            std::int64_t bmin = kAbsent;
            for (Eigen::Index t = 0; t < gs; ++t) {
                amin = std::min(amin, widen(inst.a(g * gs + t, k)));
                bmin = std::min(bmin, widen(inst.b(k, g * gs + t)));
            }
            if (amin != kAbsent) {
                const std::int64_t q = floor_div(amin, L);
                qr.a_quot(g, k) = q;
                for (Eigen::Index t = 0; t < gs; ++t) {
                    qr.a_rem(g * gs + t, k) = widen(inst.a(g * gs + t, k)) - L * q;
                }
            }
            if (bmin != kAbsent) {
                const std::int64_t q = floor_div(bmin, L);
                qr.b_quot(k, g) = q;
                for (Eigen::Index t = 0; t < gs; ++t) {
                    qr.b_rem(k, g * gs + t) = widen(inst.b(k, g * gs + t)) - L * q;
                }
            }
        }
    }
    qr.c_quot = minplus_bruteforce<std::int64_t>(qr.a_quot, qr.b_quot);
    return qr;
}

std::vector<std::uint64_t> prime_window(std::int64_t magnitude, std::size_t density) {
    if (density < 1) {
        throw InputError("prime_window: q must be >= 1");
    }
    const std::int64_t u = std::max<std::int64_t>(magnitude, 1);
    const auto log_u = static_cast<std::uint64_t>(std::bit_width(static_cast<std::uint64_t>(2 * u + 1)));  // ceil(log2(2U+1))
    const std::uint64_t lo = std::max<std::uint64_t>(7, density * log_u);
    const std::uint64_t hi = 2 * lo;
    std::vector<char> composite(hi + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 2; x <= hi; ++x) {
        if (composite[x]) {
            continue;
        }
        if (x >= lo) {
            out.push_back(x);
        }
        for (std::uint64_t y = x * x; y <= hi; y += x) {
            composite[y] = 1;
        }
    }
    return out;
}

std::optional<int> residue_window(std::int64_t value, std::uint64_t p) {
    const std::int64_t m = pos_mod(value, p);
    if (m <= 3) {
        return static_cast<int>(m);
    }
    if (m >= static_cast<std::int64_t>(p) - 3) {
        return static_cast<int>(m - static_cast<std::int64_t>(p));
    }
    return std::nullopt;
}

template <class Scalar>
MinPlusMatrix<Scalar> minplus_grouped(const GroupedInstance<Scalar>& inst, std::uint64_t seed,
                                      const GroupedOptions& options, GroupedStats* stats) {
    const QuotientRemainder qr = build_quotient_remainder(inst);
    const std::size_t h = inst.groups;
    const std::size_t gs = inst.group_size;
    const std::size_t s = inst.inner();
    const std::size_t rows = h * gs;
    const std::int64_t L = inst.spread;

    GroupedStats local;
    GroupedStats& st = stats != nullptr ? *stats : local;
    st.pairs_total = h * h;

    Dense<std::int64_t> result = inf_matrix<std::int64_t>(static_cast<Eigen::Index>(rows),
                                                          static_cast<Eigen::Index>(rows));
    if (h == 0) {
        return narrow_matrix<Scalar>(result);
    }

    std::int64_t magnitude = 1;
    for (const auto* m : {&inst.a, &inst.b}) {
        for (Eigen::Index r = 0; r < m->rows(); ++r) {
            for (Eigen::Index c = 0; c < m->cols(); ++c) {
                const std::int64_t x = widen((*m)(r, c));
                if (x != kAbsent) {
                    magnitude = std::max(magnitude, x < 0 ? -x : x);
                }
            }
        }
    }
    const std::vector<std::uint64_t> primes = prime_window(magnitude, inst.density);

    // Packed layout: monomial x^alpha y^beta sits at digit alpha*slots + beta,
    // each digit `digit_bits` wide.
    const auto slots = static_cast<std::size_t>(4 * L + 1);
    const auto max_beta = static_cast<std::size_t>(4 * L - 2);
    const std::size_t digit_bits = packing_radix_bits(s);
    const std::size_t budget = options.budget.value_or(
        options.budget_factor * ((s + inst.density - 1) / inst.density));
    const auto rounds = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(options.rounds_factor * std::log2(static_cast<double>(h)))));

    std::vector<char> pending(h * h, 0);
    std::size_t pending_count = 0;
    for (std::size_t gi = 0; gi < h; ++gi) {
        for (std::size_t gj = 0; gj < h; ++gj) {
            if (qr.c_quot(static_cast<Eigen::Index>(gi), static_cast<Eigen::Index>(gj)) != kAbsent) {
                pending[gi * h + gj] = 1;
                ++pending_count;
            }
        }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t round = 0; round < rounds && pending_count > 0; ++round) {
        const std::uint64_t p = primes[rng() % primes.size()];
        st.primes.push_back(p);
        ++st.rounds_run;

        WideIntMatrix b_poly(s, rows);
        bool b_built = false;

        for (std::size_t gi = 0; gi < h; ++gi) {
            const auto egi = static_cast<Eigen::Index>(gi);
            struct Accepted {
                std::size_t gj;
                std::array<std::vector<std::size_t>, 7> fp;  // index r + 3
            };
            std::vector<Accepted> accepted;
            for (std::size_t gj = 0; gj < h; ++gj) {
                if (!pending[gi * h + gj]) {
                    continue;
                }
                const auto egj = static_cast<Eigen::Index>(gj);
                const std::int64_t cq = qr.c_quot(egi, egj);
                Accepted acc{gj, {}};
                std::size_t total = 0;
                for (std::size_t k = 0; k < s; ++k) {
                    const auto ek = static_cast<Eigen::Index>(k);
                    const std::int64_t aq = qr.a_quot(egi, ek);
                    const std::int64_t bq = qr.b_quot(ek, egj);
                    if (aq == kAbsent || bq == kAbsent) {
                        continue;
                    }
                    const std::int64_t t = aq + bq - cq;
                    if (t < 4) {
                        continue;  // inside the true window
                    }
                    if (auto r = residue_window(t, p)) {
                        acc.fp[static_cast<std::size_t>(*r + 3)].push_back(k);
                        ++total;
                    }
                }
                if (total > budget) {
                    ++st.deferrals;
                    continue;
                }
                st.false_positives_subtracted += total;
                accepted.push_back(std::move(acc));
            }
            if (accepted.empty()) {
                continue;
            }

            if (!b_built) {
                for (std::size_t k = 0; k < s; ++k) {
                    const auto ek = static_cast<Eigen::Index>(k);
                    for (std::size_t j = 0; j < rows; ++j) {
                        const std::int64_t bq = qr.b_quot(ek, static_cast<Eigen::Index>(j / gs));
                        if (bq == kAbsent) {
                            continue;
                        }
                        const auto alpha = static_cast<std::size_t>(pos_mod(bq, p));
                        const auto beta = static_cast<std::size_t>(qr.b_rem(ek, static_cast<Eigen::Index>(j)));
                        b_poly(k, j) = WideInt::power_of_two((alpha * slots + beta) * digit_bits);
                    }
                }
                b_built = true;
            }
            WideIntMatrix a_poly(gs, s);
            for (std::size_t t = 0; t < gs; ++t) {
                const auto ei = static_cast<Eigen::Index>(gi * gs + t);
                for (std::size_t k = 0; k < s; ++k) {
                    const auto ek = static_cast<Eigen::Index>(k);
                    const std::int64_t aq = qr.a_quot(egi, ek);
                    if (aq == kAbsent) {
                        continue;
                    }
                    const auto alpha = static_cast<std::size_t>(pos_mod(aq, p));
                    const auto beta = static_cast<std::size_t>(qr.a_rem(ei, ek));
                    a_poly(t, k) = WideInt::power_of_two((alpha * slots + beta) * digit_bits);
                }
            }
            const WideIntMatrix c_poly = wideint_mm(a_poly, b_poly);

            for (auto& acc : accepted) {
                const std::size_t gj = acc.gj;
                const std::int64_t cq = qr.c_quot(egi, static_cast<Eigen::Index>(gj));
                // y-only products over each false-positive list
                std::array<std::optional<WideIntMatrix>, 7> fp_poly;
                for (std::size_t ri = 0; ri < 7; ++ri) {
                    const auto& ks = acc.fp[ri];
                    if (ks.empty()) {
                        continue;
                    }
                    WideIntMatrix ya(gs, ks.size());
                    WideIntMatrix yb(ks.size(), gs);
                    for (std::size_t t = 0; t < gs; ++t) {
                        for (std::size_t x = 0; x < ks.size(); ++x) {
                            const auto ek = static_cast<Eigen::Index>(ks[x]);
                            const auto ra = qr.a_rem(static_cast<Eigen::Index>(gi * gs + t), ek);
                            const auto rb = qr.b_rem(ek, static_cast<Eigen::Index>(gj * gs + t));
                            ya(t, x) = WideInt::power_of_two(static_cast<std::size_t>(ra) * digit_bits);
                            yb(x, t) = WideInt::power_of_two(static_cast<std::size_t>(rb) * digit_bits);
                        }
                    }
                    fp_poly[ri] = wideint_mm(ya, yb);
                }

                for (std::size_t ti = 0; ti < gs; ++ti) {
                    const std::size_t i = gi * gs + ti;
                    for (std::size_t tj = 0; tj < gs; ++tj) {
                        const std::size_t j = gj * gs + tj;
                        const WideInt& poly = c_poly(ti, j);
                        auto count = [&](int r, std::size_t beta) -> std::int64_t {
                            const auto alpha = static_cast<std::size_t>(pos_mod(cq + r, p));
                            auto coef = static_cast<std::int64_t>(
                                poly.field((alpha * slots + beta) * digit_bits, digit_bits));
                            if (alpha + p <= 2 * p - 2) {
                                coef += static_cast<std::int64_t>(
                                    poly.field(((alpha + p) * slots + beta) * digit_bits, digit_bits));
                            }
                            const auto& fp = fp_poly[static_cast<std::size_t>(r + 3)];
                            if (fp) {
                                coef -= static_cast<std::int64_t>((*fp)(ti, tj).field(beta * digit_bits, digit_bits));
                            }
                            return coef;
                        };
                        std::int64_t best = kAbsent;
                        if (st.record_terms) {
                            for (int r = -3; r <= 3; ++r) {
                                for (std::size_t beta = 0; beta <= max_beta; ++beta) {
                                    const std::int64_t cnt = count(r, beta);
                                    if (cnt <= 0) {
                                        continue;
                                    }
                                    best = std::min(best, L * (cq + r) + static_cast<std::int64_t>(beta));
                                    st.terms.push_back({i, j, cq + r, static_cast<std::int64_t>(beta),
                                                        static_cast<std::uint64_t>(cnt), p});
                                }
                            }
                        } else {
                            // walk candidate values upward; the first live term is the minimum
                            const auto span_hi = static_cast<std::int64_t>(3 * L + static_cast<std::int64_t>(max_beta));
                            for (std::int64_t off = -3 * L; off <= span_hi && best == kAbsent; ++off) {
                                for (int r = -3; r <= 3; ++r) {
                                    const std::int64_t beta = off - L * r;
                                    if (beta < 0 || beta > static_cast<std::int64_t>(max_beta)) {
                                        continue;
                                    }
                                    if (count(r, static_cast<std::size_t>(beta)) > 0) {
                                        best = L * cq + off;
                                        break;
                                    }
                                }
                            }
                        }
                        result(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = best;
                    }
                }
                pending[gi * h + gj] = 0;
                --pending_count;
                ++st.pairs_by_polynomial;
            }
        }
    }

    // deferred through every round: brute force the block
    for (std::size_t gi = 0; gi < h; ++gi) {
        for (std::size_t gj = 0; gj < h; ++gj) {
            if (!pending[gi * h + gj]) {
                continue;
            }
            ++st.pairs_by_fallback;
            for (std::size_t i = gi * gs; i < (gi + 1) * gs; ++i) {
                for (std::size_t j = gj * gs; j < (gj + 1) * gs; ++j) {
                    std::int64_t best = kAbsent;
                    for (std::size_t k = 0; k < s; ++k) {
                        const std::int64_t x = widen(inst.a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
                        const std::int64_t y = widen(inst.b(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)));
                        if (x != kAbsent && y != kAbsent) {
                            best = std::min(best, x + y);
                        }
                    }
                    result(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = best;
                }
            }
        }
    }
    return narrow_matrix<Scalar>(result);
}

#define APSP_INSTANTIATE_MINPLUS(T)                                                                            \
    template MinPlusMatrix<T> minplus_bruteforce<T>(const MinPlusMatrix<T>&, const MinPlusMatrix<T>&);         \
    template MinPlusMatrix<T> minplus_bounded<T>(const MinPlusMatrix<T>&, const MinPlusMatrix<T>&, std::int64_t); \
    template MinPlusMatrix<T> minplus_shifted<T>(const MinPlusMatrix<T>&, const MinPlusMatrix<T>&, std::int64_t); \
    template QuotientRemainder build_quotient_remainder<T>(const GroupedInstance<T>&);                         \
    template MinPlusMatrix<T> minplus_grouped<T>(const GroupedInstance<T>&, std::uint64_t, const GroupedOptions&, \
                                                 GroupedStats*);

APSP_INSTANTIATE_MINPLUS(std::int64_t)
APSP_INSTANTIATE_MINPLUS(dist_t)

#undef APSP_INSTANTIATE_MINPLUS

} // namespace apsp
