#include "cmnd/charsum.hpp"

#include <atomic>
#include <exception>
#include <mutex>

namespace cmnd {

namespace {

void check_inputs(const FinAbGroup& g, std::span<const i64> weights,
                  std::span<const Character> chars) {
    if (static_cast<long>(weights.size()) != g.order())
        throw InvalidInput("weighted_character_sums: one weight per group element required");
    for (const auto& chi : chars)
        if (!same_group(g, *chi.group()))
            throw InvalidInput("weighted_character_sums: character of a different group");
}

}  // namespace

std::vector<CycInt> weighted_character_sums(const FinAbGroup& g, std::span<const i64> weights,
                                            std::span<const Character> chars) {
    check_inputs(g, weights, chars);
    const long e = g.exponent();
    const long n = g.order();
    std::vector<CycInt> out(chars.size());

    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    const long count = static_cast<long>(chars.size());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < count; ++idx) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            // Bucket the weights by zeta exponent, then reduce once.
            std::vector<i64> buckets(static_cast<size_t>(e), 0);
            const auto& chi = chars[static_cast<size_t>(idx)];
            for (long i = 0; i < n; ++i) {
                long k = chi.zeta_exponent(g.at(i));
                buckets[static_cast<size_t>(k)] =
                    checked_add(buckets[static_cast<size_t>(k)], weights[static_cast<size_t>(i)]);
            }
            out[static_cast<size_t>(idx)] = reduce_zeta_coeffs(e, buckets);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!failed.exchange(true)) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<CycInt> weighted_character_sums_serial(const FinAbGroup& g,
                                                   std::span<const i64> weights,
                                                   std::span<const Character> chars) {
    check_inputs(g, weights, chars);
    const long e = g.exponent();
    const long n = g.order();
    std::vector<CycInt> out;
    out.reserve(chars.size());
    for (const auto& chi : chars) {
        CycInt acc = CycInt::zero(e);
        for (long i = 0; i < n; ++i) {
            i64 w = weights[static_cast<size_t>(i)];
            if (w == 0) continue;
            acc = acc + CycInt::from_integer(e, w) * chi(g.at(i));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace cmnd
