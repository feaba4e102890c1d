#include "doctest.h"

#include <random>

#include "cmnd/matrix.hpp"
#include "helpers.hpp"

using namespace cmnd;

TEST_CASE("rank basics") {
    CHECK(rank(IntMatrix::identity(3)) == 3);
    CHECK(kernel_rank(IntMatrix::identity(3)) == 0);

    IntMatrix prop(2, 2);
    prop.at(0, 0) = 1;
    prop.at(0, 1) = 2;
    prop.at(1, 0) = 2;
    prop.at(1, 1) = 4;
    CHECK(rank(prop) == 1);

    IntMatrix zero(4, 7);
    CHECK(rank(zero) == 0);
    CHECK(kernel_rank(zero) == 7);

    IntMatrix row(1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    CHECK(kernel_rank(row) == 1);

    CHECK(rank(IntMatrix()) == 0);
}

TEST_CASE("rank agrees with rational elimination on random matrices") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 300; ++trial) {
        long r = 1 + static_cast<long>(rng() % 8);
        long c = 1 + static_cast<long>(rng() % 8);
        IntMatrix m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) {
                // Sprinkle zeros to hit rank-deficient and column-skip paths.
                long v = static_cast<long>(rng() % 7) - 3;
                m.at(i, j) = (rng() % 3 == 0) ? 0 : v;
            }
        long expected = testutil::rank_rational(m);
        CHECK(rank(m) == expected);
        CHECK(rank_parallel(m) == expected);
        CHECK(rank(m.transposed()) == expected);
        CHECK(kernel_rank(m) + rank(m) == c);
    }
}

TEST_CASE("rank is invariant under row operations") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        long n = 2 + static_cast<long>(rng() % 6);
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(rng() % 9) - 4;
        long base = rank(m);

        IntMatrix swapped = m;
        for (long j = 0; j < n; ++j) std::swap(swapped.at(0, j), swapped.at(n - 1, j));
        CHECK(rank(swapped) == base);

        IntMatrix combined = m;
        for (long j = 0; j < n; ++j)
            combined.at(1, j) = checked_add(combined.at(1, j), checked_mul(3, m.at(0, j)));
        CHECK(rank(combined) == base);
    }
}

TEST_CASE("int64 overflow falls back to arbitrary precision") {
    // Entries around 2^40: the first Bareiss update already needs ~2^80.
    std::mt19937_64 rng(31337);
    IntMatrix m(8, 8);
    for (long i = 0; i < 8; ++i)
        for (long j = 0; j < 8; ++j)
            m.at(i, j) = static_cast<i64>(rng() % (i64{1} << 40)) - (i64{1} << 39);

    bool overflowed = false;
    long r64 = detail::rank_int64(m, false, overflowed);
    (void)r64;
    CHECK(overflowed);  // the fast path must report, not wrap

    long expected = testutil::rank_rational(m);
    CHECK(detail::rank_bignum(m, false) == expected);
    CHECK(detail::rank_bignum(m, true) == expected);
    CHECK(rank(m) == expected);
    CHECK(rank_parallel(m) == expected);
}

TEST_CASE("bignum path handles structured singular matrices") {
    // Rank-1 outer product with huge entries.
    IntMatrix m(6, 6);
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j < 6; ++j) m.at(i, j) = (i64{1} << 41) * (i + 1) + (i + 1) * j;
    // Row i is (i+1) * (2^41 + j), so the matrix has rank 1.
    long expected = testutil::rank_rational(m);
    CHECK(expected == 1);
    CHECK(rank(m) == expected);
}
