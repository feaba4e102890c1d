#pragma once

#include <vector>

#include "cmnd/arith.hpp"

namespace cmnd {

// Dense row-major integer matrix.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols), 0) {}

    static IntMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    i64& at(long r, long c) { return entries_[static_cast<size_t>(r * cols_ + c)]; }
    i64 at(long r, long c) const { return entries_[static_cast<size_t>(r * cols_ + c)]; }
    const std::vector<i64>& entries() const { return entries_; }

    IntMatrix transposed() const;

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<i64> entries_;
};

// Exact rank over Q by fraction-free (Bareiss) elimination.  A checked
// 64-bit pass runs first; if any intermediate product would overflow, the
// elimination is redone in arbitrary precision.
//
// rank() is single-threaded: the per-step barriers of a parallel elimination
// cost more than they return below several physical cores (see the benchmark
// target).  rank_parallel() is the OpenMP variant with striped row
// ownership; it always returns the same value.
long rank(const IntMatrix& m);
long rank_parallel(const IntMatrix& m);

long kernel_rank(const IntMatrix& m);

namespace detail {
// overflow is set instead of throwing; the caller falls back to bignum.
long rank_int64(const IntMatrix& m, bool parallel, bool& overflow);
long rank_bignum(const IntMatrix& m, bool parallel);
}  // namespace detail

}  // namespace cmnd
