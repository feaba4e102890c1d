// Benchmark of the OpenMP kernels against their serial references.  Each
// section verifies that the two paths return identical results before
// reporting timings, so this doubles as a stress test.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmnd/charsum.hpp"
#include "cmnd/generic.hpp"
#include "cmnd/matrix.hpp"
#include "cmnd/reduction.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0).count();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n", name,
                serial * 1e3, parallel * 1e3, parallel > 0 ? serial / parallel : 0.0);
}

// A CM-type on the full unit group: pick the member of each conjugate pair
// with the smaller representative, then flip a deterministic selection.
cmnd::CMType half_system(const cmnd::GroupPtr& g) {
    std::vector<long> elems;
    std::vector<char> seen(static_cast<size_t>(g->order()), 0);
    std::mt19937 rng(12345);
    for (long t : g->elements()) {
        if (seen[static_cast<size_t>(g->index_of(t))]) continue;
        long it = g->mul(g->iota(), t);
        seen[static_cast<size_t>(g->index_of(t))] = 1;
        seen[static_cast<size_t>(g->index_of(it))] = 1;
        elems.push_back(rng() % 4 ? t : it);
    }
    return cmnd::make_cm_type(g, std::move(elems));
}

void bench_character_scan(long m, int repeats) {
    auto g = cmnd::make_group(m);
    auto phi = half_system(g);
    auto odd = cmnd::odd_characters(g);
    std::vector<cmnd::i64> weights(static_cast<size_t>(g->order()), 0);
    for (long t : phi.elements()) weights[static_cast<size_t>(g->index_of(t))] = 1;

    std::printf("character scan: m=%ld, |G|=%ld, %zu odd characters, e=%ld\n", m, g->order(),
                odd.size(), g->exponent());

    auto t0 = Clock::now();
    std::vector<cmnd::CycInt> ref;
    for (int r = 0; r < repeats; ++r) ref = cmnd::weighted_character_sums_serial(*g, weights, odd);
    double ts = seconds_since(t0);

    const int original_threads = max_threads();
    set_threads(1);
    t0 = Clock::now();
    std::vector<cmnd::CycInt> one;
    for (int r = 0; r < repeats; ++r) one = cmnd::weighted_character_sums(*g, weights, odd);
    double t1 = seconds_since(t0);

    set_threads(original_threads);
    t0 = Clock::now();
    std::vector<cmnd::CycInt> par;
    for (int r = 0; r < repeats; ++r) par = cmnd::weighted_character_sums(*g, weights, odd);
    double tp = seconds_since(t0);

    if (ref != par || ref != one) {
        std::printf("MISMATCH in character scan results\n");
        std::exit(1);
    }
    std::printf("  reference (ring ops)       %8.3f ms\n", ts * 1e3);
    report("  bucketed kernel (1 vs max)", t1, tp);
}

void bench_rank(long n, int repeats) {
    std::mt19937 rng(98765);
    cmnd::IntMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(rng() % 19) - 9;

    std::printf("integer rank: %ldx%ld, entries in [-9,9]\n", n, n);

    auto t0 = Clock::now();
    long rs = 0;
    for (int r = 0; r < repeats; ++r) rs = cmnd::rank(m);
    double ts = seconds_since(t0);

    t0 = Clock::now();
    long rp = 0;
    for (int r = 0; r < repeats; ++r) rp = cmnd::rank_parallel(m);
    double tp = seconds_since(t0);

    if (rs != rp) {
        std::printf("MISMATCH: rank %ld vs %ld\n", rs, rp);
        std::exit(1);
    }
    report("  bareiss rank", ts, tp);
}

void bench_prime_scan(long m, long hi) {
    auto g = cmnd::make_group(m);
    auto phi = half_system(g);
    std::vector<long> primes;
    for (long p = 2; p <= hi; ++p)
        if (cmnd::is_prime(p) && m % p != 0) primes.push_back(p);

    std::printf("prime scan: m=%ld, %zu primes up to %ld\n", m, primes.size(), hi);

    std::vector<cmnd::ReductionStatus> ref(primes.size()), par(primes.size());

    auto t0 = Clock::now();
    for (size_t i = 0; i < primes.size(); ++i)
        ref[i] = cmnd::character_test(phi, primes[i]).status;
    double ts = seconds_since(t0);

    const long count = static_cast<long>(primes.size());
    t0 = Clock::now();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
        par[static_cast<size_t>(i)] =
            cmnd::character_test(phi, primes[static_cast<size_t>(i)]).status;
    double tp = seconds_since(t0);

    if (ref != par) {
        std::printf("MISMATCH in prime scan results\n");
        std::exit(1);
    }
    report("  per-prime reduction test", ts, tp);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    std::printf("threads: %d\n", max_threads());
    set_threads(max_threads());

    if (quick) {
        bench_character_scan(45, 2);
        bench_rank(24, 2);
        bench_prime_scan(27, 400);
    } else {
        bench_character_scan(1009, 3);
        bench_rank(120, 3);
        bench_prime_scan(101, 6000);
    }
    std::printf("all parallel results matched the serial references\n");
    return 0;
}
