#pragma once

// Test-local helpers and independent oracles.  Where a helper serves as a
// cross-check (rational rank, float character sums) it deliberately avoids
// the library code path it is checking.

#include <array>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gmpxx.h>

#include "cmnd/arith.hpp"
#include "cmnd/matrix.hpp"

namespace testutil {

// Rank over Q by plain rational Gaussian elimination.
inline long rank_rational(const cmnd::IntMatrix& m) {
    const long rows = m.rows(), cols = m.cols();
    std::vector<mpq_class> a(static_cast<size_t>(rows * cols));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            a[static_cast<size_t>(i * cols + j)] = static_cast<long>(m.at(i, j));
    long rank = 0;
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
        mpq_class pivot = a[static_cast<size_t>(rank * cols + c)];
        for (long i = rank + 1; i < rows; ++i) {
            mpq_class factor = a[static_cast<size_t>(i * cols + c)] / pivot;
            if (factor == 0) continue;
            for (long j = c; j < cols; ++j)
                a[static_cast<size_t>(i * cols + j)] -=
                    factor * a[static_cast<size_t>(rank * cols + j)];
        }
        ++rank;
    }
    return rank;
}

inline std::complex<double> complex_value(const cmnd::CycInt& v) {
    auto [re, im] = v.to_complex();
    return {re, im};
}

// Known cyclotomic polynomials, lowest degree first (standard tables).
inline const std::vector<std::pair<long, std::vector<cmnd::i64>>>& known_cyclotomics() {
    static const std::vector<std::pair<long, std::vector<cmnd::i64>>> table = {
        {1, {-1, 1}},
        {2, {1, 1}},
        {3, {1, 1, 1}},
        {4, {1, 0, 1}},
        {5, {1, 1, 1, 1, 1}},
        {6, {1, -1, 1}},
        {7, {1, 1, 1, 1, 1, 1, 1}},
        {8, {1, 0, 0, 0, 1}},
        {9, {1, 0, 0, 1, 0, 0, 1}},
        {10, {1, -1, 1, -1, 1}},
        {12, {1, 0, -1, 0, 1}},
        {15, {1, -1, 0, 1, -1, 1, 0, -1, 1}},
        {18, {1, 0, 0, -1, 0, 0, 1}},
        {27, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    };
    return table;
}

// Remainder of a modulo monic b, both lowest degree first.
inline std::vector<cmnd::i64> poly_remainder(std::vector<cmnd::i64> a,
                                             const std::vector<cmnd::i64>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= b.size()) {
        cmnd::i64 c = a.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string tool_path() {
    if (const char* env = std::getenv("CMND_BIN")) return env;
#ifdef CMND_BIN_PATH
    return CMND_BIN_PATH;
#else
    return "./cmnd";
#endif
}

inline std::vector<long> primes_below(long n) {
    std::vector<long> out;
    for (long p = 2; p < n; ++p)
        if (cmnd::is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace testutil
