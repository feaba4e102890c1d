#include "cmnd/matrix.hpp"

#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <gmpxx.h>

namespace cmnd {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (long c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

struct I64Ops {
    using Value = i64;
    static bool mul(i64 a, i64 b, i64& out) { return !__builtin_mul_overflow(a, b, &out); }
    static bool sub(i64 a, i64 b, i64& out) { return !__builtin_sub_overflow(a, b, &out); }
    static bool div_exact(i64 a, i64 b, i64& out) {
        if (a == std::numeric_limits<i64>::min() && b == -1) return false;
        out = a / b;
        return true;
    }
};

struct BignumOps {
    using Value = mpz_class;
    static bool mul(const mpz_class& a, const mpz_class& b, mpz_class& out) {
        out = a * b;
        return true;
    }
    static bool sub(const mpz_class& a, const mpz_class& b, mpz_class& out) {
        out = a - b;
        return true;
    }
    static bool div_exact(const mpz_class& a, const mpz_class& b, mpz_class& out) {
        mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return true;
    }
};

// Fraction-free elimination with row swaps and column skipping.  After each
// step every entry is a minor of the original matrix, so the division by the
// previous pivot is exact (Sylvester's identity); entries stay bounded by
// determinant size instead of growing doubly exponentially.
template <class Ops>
long bareiss_rank(std::vector<typename Ops::Value> a, long rows, long cols, bool parallel,
                  bool& overflow) {
    using V = typename Ops::Value;
    overflow = false;
    if (rows == 0 || cols == 0) return 0;

    long rank = 0;
    V prev = V(1);
    std::atomic<bool> bad{false};
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long i = rank; i < rows; ++i)
            if (a[static_cast<size_t>(i * cols + c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(piv * cols + j)],
                          a[static_cast<size_t>(rank * cols + j)]);
        const long pr = rank;

#pragma omp parallel for schedule(static) if (parallel)
        for (long i = pr + 1; i < rows; ++i) {
            if (bad.load(std::memory_order_relaxed)) continue;
            V t1, t2, t3;
            bool ok = true;
            for (long j = c + 1; j < cols; ++j) {
                ok = Ops::mul(a[static_cast<size_t>(i * cols + j)],
                              a[static_cast<size_t>(pr * cols + c)], t1) &&
                     Ops::mul(a[static_cast<size_t>(i * cols + c)],
                              a[static_cast<size_t>(pr * cols + j)], t2) &&
                     Ops::sub(t1, t2, t3) &&
                     Ops::div_exact(t3, prev, a[static_cast<size_t>(i * cols + j)]);
                if (!ok) break;
            }
            if (!ok)
                bad.store(true, std::memory_order_relaxed);
            else
                a[static_cast<size_t>(i * cols + c)] = V(0);
        }
        if (bad.load()) {
            overflow = true;
            return -1;
        }
        prev = a[static_cast<size_t>(pr * cols + c)];
        ++rank;
    }
    return rank;
}

long rank_impl(const IntMatrix& m, bool parallel) {
    bool overflow = false;
    long r = detail::rank_int64(m, parallel, overflow);
    if (overflow) r = detail::rank_bignum(m, parallel);
    return r;
}

}  // namespace

namespace detail {

long rank_int64(const IntMatrix& m, bool parallel, bool& overflow) {
    return bareiss_rank<I64Ops>(m.entries(), m.rows(), m.cols(), parallel, overflow);
}

long rank_bignum(const IntMatrix& m, bool parallel) {
    std::vector<mpz_class> a;
    a.reserve(m.entries().size());
    for (i64 v : m.entries()) a.emplace_back(static_cast<long>(v));
    bool overflow = false;
    return bareiss_rank<BignumOps>(std::move(a), m.rows(), m.cols(), parallel, overflow);
}

}  // namespace detail

long rank(const IntMatrix& m) { return rank_impl(m, false); }
long rank_parallel(const IntMatrix& m) { return rank_impl(m, true); }

long kernel_rank(const IntMatrix& m) { return m.cols() - rank(m); }

}  // namespace cmnd
