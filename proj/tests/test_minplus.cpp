#include <doctest.h>

#include <set>

#include "apsp/minplus.hpp"
#include "oracles.hpp"

using namespace apsp;
using M = Dense<std::int64_t>;
using Table = std::vector<std::vector<std::int64_t>>;

namespace {

constexpr std::int64_t X = kInf<std::int64_t>;

Table to_table(const M& m) {
    Table t(static_cast<std::size_t>(m.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            t[i][j] = is_inf(m(i, j)) ? oracle::kNone : m(i, j);
        }
    }
    return t;
}

Table reference(const M& a, const M& b) {
    return oracle::tropical(to_table(a), to_table(b));
}

M random_matrix(std::size_t r, std::size_t c, std::int64_t lo, std::int64_t hi, double inf_rate, oracle::Rng& rng) {
    M m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = rng.chance(inf_rate) ? X : rng.range(lo, hi);
        }
    }
    return m;
}

/// B with each row confined to a window of width `spread`.
M random_row_banded(std::size_t r, std::size_t c, std::int64_t spread, oracle::Rng& rng) {
    M m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
        const std::int64_t base = rng.range(-1000, 1000);
        const bool row_inf = rng.chance(0.1);
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(k, j) = row_inf || rng.chance(0.1) ? X : base + rng.range(0, spread);
        }
    }
    return m;
}

GroupedInstance<std::int64_t> random_grouped(oracle::Rng& rng, std::size_t max_h = 8, std::size_t max_gs = 16,
                                             std::size_t max_s = 64, std::int64_t max_l = 6) {
    GroupedInstance<std::int64_t> inst;
    inst.groups = 1 + rng.below(max_h);
    inst.group_size = 1 + rng.below(max_gs);
    inst.spread = 1 + rng.range(0, max_l - 1);
    inst.density = std::size_t{1} << rng.below(3);
    const std::size_t s = 1 + rng.below(max_s);
    const std::size_t rows = inst.groups * inst.group_size;
    const std::int64_t magnitude = rng.chance(0.5) ? 30 : 5000;
    inst.a = M(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(s));
    inst.b = M(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(rows));
    for (std::size_t g = 0; g < inst.groups; ++g) {
        for (std::size_t k = 0; k < s; ++k) {
            const bool a_inf = rng.chance(0.1);
            const bool b_inf = rng.chance(0.1);
            const std::int64_t a_base = rng.range(-magnitude, magnitude);
            const std::int64_t b_base = rng.range(-magnitude, magnitude);
            for (std::size_t t = 0; t < inst.group_size; ++t) {
                const auto i = static_cast<Eigen::Index>(g * inst.group_size + t);
                const auto ek = static_cast<Eigen::Index>(k);
                inst.a(i, ek) = a_inf ? X : a_base + rng.range(0, inst.spread);
                inst.b(ek, i) = b_inf ? X : b_base + rng.range(0, inst.spread);
            }
        }
    }
    return inst;
}

void check_quotient_sandwich(const GroupedInstance<std::int64_t>& inst, const QuotientRemainder& qr) {
    const std::int64_t L = inst.spread;
    const Table c = reference(inst.a, inst.b);
    const std::size_t gs = inst.group_size;
    for (Eigen::Index i = 0; i < inst.a.rows(); ++i) {
        for (Eigen::Index k = 0; k < inst.a.cols(); ++k) {
            const auto g = static_cast<Eigen::Index>(static_cast<std::size_t>(i) / gs);
            if (is_inf(inst.a(i, k))) {
                CHECK(qr.a_rem(i, k) == kAbsent);
                continue;
            }
            CHECK(inst.a(i, k) == L * qr.a_quot(g, k) + qr.a_rem(i, k));
            CHECK(qr.a_rem(i, k) >= 0);
            CHECK(qr.a_rem(i, k) < 2 * L);
        }
    }
    for (Eigen::Index k = 0; k < inst.b.rows(); ++k) {
        for (Eigen::Index j = 0; j < inst.b.cols(); ++j) {
            const auto g = static_cast<Eigen::Index>(static_cast<std::size_t>(j) / gs);
            if (is_inf(inst.b(k, j))) {
                continue;
            }
            CHECK(inst.b(k, j) == L * qr.b_quot(k, g) + qr.b_rem(k, j));
            CHECK(qr.b_rem(k, j) >= 0);
            CHECK(qr.b_rem(k, j) < 2 * L);
        }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            const std::int64_t cq = qr.c_quot(static_cast<Eigen::Index>(i / gs), static_cast<Eigen::Index>(j / gs));
            if (c[i][j] == oracle::kNone) {
                continue;
            }
            REQUIRE(cq != kAbsent);
            CHECK(c[i][j] - L * cq >= 0);
            CHECK(c[i][j] - L * cq < 4 * L);
        }
    }
}

} // namespace

TEST_CASE("bruteforce small cases") {
    M a(2, 2), b(2, 2), want(2, 2);
    a << 0, 1, 2, 0;
    b << 0, 3, 1, 0;
    want << 0, 1, 1, 0;
    CHECK(minplus_bruteforce<std::int64_t>(a, b) == want);

    oracle::Rng rng(1);
    const M bb = random_matrix(4, 5, 0, 9, 0.0, rng);
    const M c = minplus_bruteforce<std::int64_t>(M::Zero(3, 4), bb);
    for (Eigen::Index j = 0; j < 5; ++j) {
        CHECK(c(1, j) == bb.col(j).minCoeff());
    }

    M ai = random_matrix(3, 4, 0, 9, 0.0, rng);
    ai.row(1).setConstant(X);
    const M ci = minplus_bruteforce<std::int64_t>(ai, bb);
    for (Eigen::Index j = 0; j < 5; ++j) {
        CHECK(ci(1, j) == X);
    }
    CHECK(minplus_bruteforce<std::int64_t>(M(2, 0), M(0, 3)) == M::Constant(2, 3, X));
    CHECK_THROWS_AS(minplus_bruteforce<std::int64_t>(M(2, 3), M(2, 3)), InputError);
}

TEST_CASE("bounded small cases") {
    CHECK(minplus_bounded<std::int64_t>(M::Zero(3, 4), M::Zero(4, 2), 0) == M::Zero(3, 2));
    oracle::Rng rng(2);
    const M b = random_matrix(4, 6, 0, 5, 0.2, rng);
    M id = M::Constant(4, 4, X);
    id.diagonal().setZero();
    CHECK(minplus_bounded<std::int64_t>(id, b, 5) == b);
    M bad = b;
    bad(0, 0) = 6;
    CHECK_THROWS_AS(minplus_bounded<std::int64_t>(id, bad, 5), InputError);
    bad(0, 0) = -1;
    CHECK_THROWS_AS(minplus_bounded<std::int64_t>(id, bad, 5), InputError);
}

TEST_CASE("bounded matches bruteforce") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n1 = 1 + rng.below(120);
        const std::size_t n2 = 1 + rng.below(120);
        const std::size_t n3 = 1 + rng.below(120);
        const std::int64_t L = rng.range(0, 8);
        const M a = random_matrix(n1, n2, 0, L, 0.2, rng);
        const M b = random_matrix(n2, n3, 0, L, 0.2, rng);
        CHECK(to_table(minplus_bounded<std::int64_t>(a, b, L)) == reference(a, b));
    }
}

TEST_CASE("bounded on unsigned distances") {
    oracle::Rng rng(4);
    using D = Dense<dist_t>;
    D a(3, 3), b(3, 3);
    a << 0, 1, INF, 2, INF, 0, INF, INF, INF;
    b << 1, 0, 2, INF, 1, 1, 0, 0, 0;
    const D c = minplus_bounded<dist_t>(a, b, 2);
    CHECK(c == minplus_bruteforce<dist_t>(a, b));
    CHECK(c(2, 0) == INF);
}

TEST_CASE("shifted small cases") {
    oracle::Rng rng(5);
    const M a = random_matrix(5, 4, -50, 50, 0.2, rng);
    M b(4, 3);
    for (Eigen::Index k = 0; k < 4; ++k) {
        b.row(k).setConstant(rng.range(-20, 20));
    }
    const M c = minplus_shifted<std::int64_t>(a, b, 0);
    CHECK(to_table(c) == reference(a, b));
    for (Eigen::Index i = 0; i < 5; ++i) {
        CHECK(c(i, 0) == c(i, 1));
    }

    M ai = a;
    ai.row(2).setConstant(X);
    const M ci = minplus_shifted<std::int64_t>(ai, b, 0);
    for (Eigen::Index j = 0; j < 3; ++j) {
        CHECK(ci(2, j) == X);
    }

    M wide = b;
    wide(1, 2) += 5;
    CHECK_THROWS_AS(minplus_shifted<std::int64_t>(a, wide, 4), InputError);
}

TEST_CASE("shifted matches bruteforce") {
    oracle::Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n1 = 1 + rng.below(64);
        const std::size_t n2 = 1 + rng.below(64);
        const std::size_t n3 = 1 + rng.below(64);
        const std::int64_t L = rng.range(0, 5);
        const M a = random_matrix(n1, n2, -1000, 1000, 0.15, rng);
        const M b = random_row_banded(n2, n3, L, rng);
        CHECK(to_table(minplus_shifted<std::int64_t>(a, b, L)) == reference(a, b));

        // shifting rows of B by arbitrary constants keeps the contract
        M moved = b;
        for (Eigen::Index k = 0; k < moved.rows(); ++k) {
            const std::int64_t delta = rng.range(-500, 500);
            for (Eigen::Index j = 0; j < moved.cols(); ++j) {
                if (!is_inf(moved(k, j))) {
                    moved(k, j) += delta;
                }
            }
        }
        CHECK(to_table(minplus_shifted<std::int64_t>(a, moved, L)) == reference(a, moved));
    }
}

TEST_CASE("quotient and remainder ranges") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = random_grouped(rng);
        check_quotient_sandwich(inst, build_quotient_remainder(inst));
    }

    GroupedInstance<std::int64_t> flat;
    flat.groups = 2;
    flat.group_size = 2;
    flat.spread = 50;
    flat.a = M::Constant(4, 3, 7);
    flat.b = M::Constant(3, 4, 9);
    const QuotientRemainder qr = build_quotient_remainder(flat);
    CHECK(qr.a_quot == Dense<std::int64_t>::Zero(2, 3));
    CHECK(qr.a_rem == flat.a);
    CHECK(qr.b_rem == flat.b);
    CHECK(qr.c_quot == Dense<std::int64_t>::Zero(2, 2));
}

TEST_CASE("grouped validation") {
    GroupedInstance<std::int64_t> inst;
    inst.groups = 2;
    inst.group_size = 2;
    inst.spread = 2;
    inst.a = M::Zero(4, 3);
    inst.b = M::Zero(3, 4);
    inst.a(1, 0) = 3;
    CHECK_THROWS_AS(minplus_grouped(inst, 1), InputError);
    inst.a(1, 0) = X;
    CHECK_THROWS_AS(minplus_grouped(inst, 1), InputError);
    inst.a(1, 0) = 0;
    inst.b(0, 3) = X;
    CHECK_THROWS_AS(minplus_grouped(inst, 1), InputError);
    inst.b(0, 3) = 0;
    inst.density = 0;
    CHECK_THROWS_AS(minplus_grouped(inst, 1), InputError);
    inst.density = 1;
    inst.a = M::Zero(3, 3);
    CHECK_THROWS_AS(minplus_grouped(inst, 1), InputError);
}

TEST_CASE("grouped degenerate cases") {
    oracle::Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = random_grouped(rng, 1, 16, 32, 6);
        REQUIRE(inst.groups == 1);
        // a single group of B columns has per-row spread <= L
        CHECK(minplus_grouped(inst, 3) == minplus_shifted<std::int64_t>(inst.a, inst.b, inst.spread));
    }
    GroupedInstance<std::int64_t> c;
    c.groups = 3;
    c.group_size = 2;
    c.spread = 3;
    c.a = M::Constant(6, 5, 11);
    c.b = M::Constant(5, 6, 11);
    CHECK(minplus_grouped(c, 1) == M::Constant(6, 6, 22));
}

TEST_CASE("grouped matches bruteforce across seeds") {
    oracle::Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = random_grouped(rng);
        const Table want = reference(inst.a, inst.b);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            GroupedStats st;
            CHECK(to_table(minplus_grouped(inst, seed, {}, &st)) == want);
            CHECK(st.pairs_by_polynomial + st.pairs_by_fallback <= st.pairs_total);
        }
    }
}

TEST_CASE("grouped on unsigned distances") {
    oracle::Rng rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        GroupedInstance<dist_t> inst;
        inst.groups = 1 + rng.below(6);
        inst.group_size = 1 + rng.below(6);
        inst.spread = 4;
        const std::size_t s = 1 + rng.below(20);
        const std::size_t rows = inst.groups * inst.group_size;
        inst.a = Dense<dist_t>(rows, s);
        inst.b = Dense<dist_t>(s, rows);
        for (std::size_t g = 0; g < inst.groups; ++g) {
            for (std::size_t k = 0; k < s; ++k) {
                const bool gone = rng.chance(0.1);
                const auto base = static_cast<dist_t>(rng.range(0, 40));
                for (std::size_t t = 0; t < inst.group_size; ++t) {
                    const auto i = static_cast<Eigen::Index>(g * inst.group_size + t);
                    inst.a(i, k) = gone ? INF : base + static_cast<dist_t>(rng.range(0, 4));
                    inst.b(k, i) = gone ? INF : base + static_cast<dist_t>(rng.range(0, 4));
                }
            }
        }
        CHECK(minplus_grouped(inst, 7) == minplus_bruteforce<dist_t>(inst.a, inst.b));
    }
}

TEST_CASE("decoded terms count exactly the true witnesses") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = random_grouped(rng, 4, 6, 24, 4);
        const QuotientRemainder qr = build_quotient_remainder(inst);
        GroupedStats st;
        st.record_terms = true;
        minplus_grouped(inst, 1 + trial, {}, &st);
        const std::size_t gs = inst.group_size;
        for (const DecodedTerm& t : st.terms) {
            const auto gi = static_cast<Eigen::Index>(t.i / gs);
            const auto gj = static_cast<Eigen::Index>(t.j / gs);
            const std::int64_t cq = qr.c_quot(gi, gj);
            CHECK(t.quotient_sum >= cq);
            CHECK(t.quotient_sum <= cq + 3);
            std::uint64_t witnesses = 0;
            std::uint64_t congruent = 0;
            const auto p = static_cast<std::int64_t>(t.prime);
            for (Eigen::Index k = 0; k < inst.a.cols(); ++k) {
                const std::int64_t aq = qr.a_quot(gi, k);
                const std::int64_t bq = qr.b_quot(k, gj);
                if (aq == kAbsent || bq == kAbsent) {
                    continue;
                }
                const bool same_rem = qr.a_rem(static_cast<Eigen::Index>(t.i), k) +
                                          qr.b_rem(k, static_cast<Eigen::Index>(t.j)) ==
                                      t.remainder_sum;
                if (same_rem && (((aq + bq - t.quotient_sum) % p) + p) % p == 0) {
                    ++congruent;
                }
                if (same_rem && aq + bq == t.quotient_sum) {
                    ++witnesses;
                }
            }
            CHECK(witnesses <= congruent);
            CHECK(t.count == witnesses);
        }
    }
}

TEST_CASE("prime window and residues") {
    for (std::int64_t u : {1, 5, 100, 5000, 1 << 20}) {
        for (std::size_t q : {1, 2, 4}) {
            const auto primes = prime_window(u, q);
            REQUIRE_FALSE(primes.empty());
            std::uint64_t log_u = 0;
            while ((std::uint64_t{1} << log_u) < static_cast<std::uint64_t>(2 * u + 1)) {
                ++log_u;
            }
            const std::uint64_t lo = std::max<std::uint64_t>(7, q * log_u);
            for (std::uint64_t p : primes) {
                CHECK(p >= lo);
                CHECK(p <= 2 * lo);
                for (std::uint64_t f = 2; f * f <= p; ++f) {
                    CHECK(p % f != 0);
                }
            }
        }
    }
    CHECK_THROWS_AS(prime_window(10, 0), InputError);
    CHECK(residue_window(0, 7) == std::optional<int>(0));
    CHECK(residue_window(10, 7) == std::optional<int>(3));
    CHECK(residue_window(6, 13) == std::nullopt);
    CHECK(residue_window(10, 13) == std::optional<int>(-3));
    CHECK(residue_window(13, 7) == std::optional<int>(-1));
    CHECK(residue_window(-2, 7) == std::optional<int>(-2));
}

TEST_CASE("grouped falls back to brute force when every prime is overloaded") {
    // Column 0 carries the true minimum; column 1 + t has quotient gap exactly
    // the t-th prime below 200, so each candidate prime sees a false positive.
    std::vector<std::int64_t> gaps;
    for (std::int64_t x = 7; x < 200; ++x) {
        bool prime = true;
        for (std::int64_t f = 2; f * f <= x; ++f) {
            prime = prime && x % f != 0;
        }
        if (prime) {
            gaps.push_back(x);
        }
    }
    GroupedInstance<std::int64_t> inst;
    inst.groups = 2;
    inst.group_size = 2;
    inst.spread = 2;
    const auto s = static_cast<Eigen::Index>(gaps.size() + 1);
    inst.a = M::Zero(4, s);
    inst.b = M::Zero(s, 4);
    for (std::size_t t = 0; t < gaps.size(); ++t) {
        inst.a.col(static_cast<Eigen::Index>(t + 1)).setConstant(inst.spread * gaps[t]);
    }
    inst.a(1, 0) = 1;
    inst.b(0, 3) = 2;
    for (std::uint64_t p : prime_window(inst.spread * gaps.back(), inst.density)) {
        CHECK(std::find(gaps.begin(), gaps.end(), static_cast<std::int64_t>(p)) != gaps.end());
    }
    GroupedOptions opt;
    opt.budget = 0;
    GroupedStats st;
    const M got = minplus_grouped(inst, 5, opt, &st);
    CHECK(to_table(got) == reference(inst.a, inst.b));
    CHECK(st.pairs_by_fallback == st.pairs_total);
    CHECK(st.pairs_by_polynomial == 0);
    CHECK(st.deferrals >= st.pairs_total);
}
