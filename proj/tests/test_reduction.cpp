#include "doctest.h"

#include "cmnd/charsum.hpp"
#include "cmnd/reduction.hpp"
#include "helpers.hpp"

using namespace cmnd;

namespace {

std::vector<CMType> all_cm_types(long m) {
    auto g = make_group(m);
    std::vector<std::pair<long, long>> pairs;
    std::vector<char> seen(static_cast<size_t>(g->order()), 0);
    for (long t : g->elements()) {
        if (seen[static_cast<size_t>(g->index_of(t))]) continue;
        long it = g->mul(g->iota(), t);
        seen[static_cast<size_t>(g->index_of(t))] = 1;
        seen[static_cast<size_t>(g->index_of(it))] = 1;
        pairs.emplace_back(t, it);
    }
    std::vector<CMType> out;
    for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
        std::vector<long> elems;
        for (size_t i = 0; i < pairs.size(); ++i)
            elems.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
        out.push_back(make_cm_type(g, std::move(elems)));
    }
    return out;
}

void check_slope_invariants(const CMType& phi, const SlopeFunction& s, long p) {
    const auto& g = *phi.group();
    // Symmetry s(tau) + s(iota tau) = 1.
    for (long t : g.elements())
        CHECK(s.numerator(t) + s.numerator(g.mul(g.iota(), t)) == s.denominator());
    // The decomposition group fixes the germ.
    auto gp = decomposition_subgroup(g, p);
    auto g1 = germ_stabilizer(s);
    for (long h : gp) CHECK(std::binary_search(g1.begin(), g1.end(), h));
    // Numerators stay within 0..f.
    for (long t : g.elements()) {
        CHECK(s.numerator(t) >= 0);
        CHECK(s.numerator(t) <= s.denominator());
    }
}

}  // namespace

TEST_CASE("decomposition subgroup examples") {
    auto g = make_group(27);
    CHECK(decomposition_subgroup(*g, 109) == std::vector<long>{1});  // 109 = 4*27 + 1
    CHECK(decomposition_subgroup(*g, 31) ==
          std::vector<long>{1, 4, 7, 10, 13, 16, 19, 22, 25});  // 31 = 4 mod 27, order 9
    CHECK_THROWS_AS(decomposition_subgroup(*g, 3), RamifiedPrime);
    CHECK_THROWS_AS(decomposition_subgroup(*g, 4), InvalidInput);  // not prime
}

TEST_CASE("slopes at a split prime are the characteristic function of inverses") {
    auto phi = fermat_cm_type(27, 1, 9, 17);
    const auto& g = *phi.group();
    auto s = slope_by_average(phi, 109);
    CHECK(s.denominator() == 1);
    for (long t : g.elements()) CHECK(s.numerator(t) == phi.indicator(g.inv(t)));
    check_slope_invariants(phi, s, 109);
}

TEST_CASE("slopes at an inert-type prime are constant 1/2") {
    // 29 = 2 mod 27 and 2 generates the full group.
    auto phi = fermat_cm_type(27, 1, 9, 17);
    auto s = slope_by_average(phi, 29);
    CHECK(s.denominator() == 18);
    for (long t : phi.group()->elements()) CHECK(s.numerator(t) == 9);
    CHECK(germ_stabilizer(s) == phi.group()->elements());
}

TEST_CASE("m=27, p=31: slope 2/3 on the identity coset") {
    auto phi = fermat_cm_type(27, 1, 9, 17);
    auto s = slope_by_average(phi, 31);
    CHECK(s.denominator() == 9);
    CHECK(s.numerator(1) == 6);
    CHECK(s.numerator(phi.group()->iota()) == 3);
    CHECK(germ_stabilizer(s) == std::vector<long>{1, 4, 7, 10, 13, 16, 19, 22, 25});
    check_slope_invariants(phi, s, 31);
}

TEST_CASE("germ stabilizer at a split prime is the type stabilizer") {
    auto phi = fermat_cm_type(27, 1, 9, 17);  // primitive
    auto s = slope_by_average(phi, 109);
    CHECK(germ_stabilizer(s) == std::vector<long>{1});
}

TEST_CASE("both slope paths agree on every type and prime (small moduli)") {
    for (long m : {4L, 5L, 7L, 8L, 9L, 12L}) {
        auto types = all_cm_types(m);
        for (long p : testutil::primes_below(200)) {
            if (m % p == 0) continue;
            for (const auto& phi : types) {
                auto avg = slope_by_average(phi, p);
                auto cosets = slope_by_cosets(phi, p);
                CHECK(avg == cosets);
                check_slope_invariants(phi, avg, p);
            }
        }
    }
    // Larger groups, slope computation only (|G| up to 18).
    for (long m : {13L, 16L, 20L, 27L}) {
        auto types = all_cm_types(m);
        for (long p : testutil::primes_below(100)) {
            if (m % p == 0) continue;
            for (const auto& phi : types) CHECK(slope_by_average(phi, p) == slope_by_cosets(phi, p));
        }
    }
    // And for the m=27 example type.
    auto phi = fermat_cm_type(27, 1, 9, 17);
    for (long p : testutil::primes_below(200)) {
        if (p == 3) continue;
        CHECK(slope_by_average(phi, p) == slope_by_cosets(phi, p));
    }
}

TEST_CASE("reduction verdicts for the m=27 example") {
    auto phi = fermat_cm_type(27, 1, 9, 17);

    SUBCASE("p = 109 (split): degenerate") {
        auto v = character_test(phi, 109);
        CHECK(v.status == ReductionStatus::Degenerate);
        CHECK(v.frobenius_order == 1);
        CHECK(v.g1 == std::vector<long>{1});
        CHECK(v.e0_degree == 18);
        CHECK(!v.outside_cm_hypotheses);
        REQUIRE(v.witness.has_value());
        auto lv = lattice_test(phi, 109);
        CHECK(lv.status == ReductionStatus::Degenerate);
    }
    SUBCASE("p = 31 (order 9): nondegenerate") {
        auto v = character_test(phi, 31);
        CHECK(v.status == ReductionStatus::Nondegenerate);
        CHECK(v.frobenius_order == 9);
        CHECK(v.g1.size() == 9);
        CHECK(v.e0_degree == 2);
        auto lv = lattice_test(phi, 31);
        CHECK(lv.status == ReductionStatus::Nondegenerate);

        // The induced 2x2 condition matrix is [[6,3],[3,6]] up to simultaneous
        // permutation: full rank, kernel rank 0 = |G0|/2 - 1.
        auto m = p_condition_matrix(phi, 31);
        REQUIRE(m.rows() == 2);
        CHECK(m.at(0, 0) == 6);
        CHECK(m.at(0, 1) == 3);
        CHECK(m.at(1, 0) == 3);
        CHECK(m.at(1, 1) == 6);
        CHECK(kernel_rank(m) == 0);
    }
    SUBCASE("p = 3 ramifies") {
        CHECK_THROWS_AS(character_test(phi, 3), RamifiedPrime);
        CHECK_THROWS_AS(lattice_test(phi, 3), RamifiedPrime);
    }
}

TEST_CASE("CM elliptic curve reductions") {
    auto phi = make_cm_type(make_group(4), {1});
    SUBCASE("p = 5 is ordinary: nondegenerate") {
        auto v = character_test(phi, 5);
        CHECK(v.status == ReductionStatus::Nondegenerate);
        CHECK(v.frobenius_order == 1);
        CHECK(v.g1 == std::vector<long>{1});
        auto lv = lattice_test(phi, 5);
        CHECK(lv.status == ReductionStatus::Nondegenerate);
    }
    SUBCASE("p = 7 is supersingular: vacuously nondegenerate") {
        auto v = character_test(phi, 7);
        CHECK(v.status == ReductionStatus::VacuouslyNondegenerate);
        CHECK(v.outside_cm_hypotheses);
        CHECK(v.frobenius_order == 2);
        auto lv = lattice_test(phi, 7);
        CHECK(lv.status == ReductionStatus::VacuouslyNondegenerate);
        CHECK(lv.outside_cm_hypotheses);
    }
}

TEST_CASE("reduction oracles agree for all types and p < 100") {
    for (long m : {4L, 5L, 7L, 8L, 9L, 12L}) {
        auto types = all_cm_types(m);
        for (long p : testutil::primes_below(100)) {
            if (m % p == 0) continue;
            for (const auto& phi : types) {
                auto cv = character_test(phi, p);
                auto lv = lattice_test(phi, p);
                CHECK(cv.status == lv.status);
                CHECK(cv.frobenius_order == lv.frobenius_order);
                CHECK(cv.g1 == lv.g1);
                CHECK(cv.e0_degree == lv.e0_degree);

                // Kernel rank identity over G0 when the lattice test ran.
                if (cv.status != ReductionStatus::VacuouslyNondegenerate) {
                    const auto& g = *phi.group();
                    auto odd = odd_characters(phi.group());
                    std::vector<Character> testable;
                    for (auto& chi : odd) {
                        bool trivial = true;
                        for (long h : cv.g1)
                            if (chi.zeta_exponent(h) != 0) {
                                trivial = false;
                                break;
                            }
                        if (trivial) testable.push_back(chi);
                    }
                    long vanishing = 0;
                    auto sums =
                        weighted_character_sums(g, cv.slopes.numerators(), testable);
                    for (const auto& s : sums)
                        if (s.is_zero()) ++vanishing;
                    long n0 = g.order() / static_cast<long>(cv.g1.size());
                    CHECK(kernel_rank(p_condition_matrix(phi, p)) == n0 / 2 - 1 + vanishing);
                }
            }
        }
    }
}

TEST_CASE("weighted slope sums match conjugate CM-type sums when G1 is trivial") {
    // With f-scaled slopes the reduction sum equals f times the Phi-sum of
    // the conjugate character.
    auto phi = fermat_cm_type(27, 1, 9, 17);
    const auto& g = *phi.group();
    for (long p : {109L, 31L, 29L}) {
        auto s = slope_by_average(phi, p);
        auto g1 = germ_stabilizer(s);
        if (std::binary_search(g1.begin(), g1.end(), g.iota())) continue;
        for (const auto& chi : odd_characters(phi.group())) {
            bool trivial = true;
            for (long h : g1)
                if (chi.zeta_exponent(h) != 0) {
                    trivial = false;
                    break;
                }
            if (!trivial) continue;
            CycInt lhs = CycInt::zero(g.exponent());
            for (long t : g.elements())
                lhs = lhs + CycInt::from_integer(g.exponent(), s.numerator(t)) * chi(t);
            // Conjugate character: negated exponents.
            std::vector<long> conj_exps;
            for (long e : chi.exponents()) conj_exps.push_back(-e);
            Character conj(phi.group(), conj_exps);
            CycInt rhs = CycInt::from_integer(g.exponent(), s.denominator()) *
                         character_sum(conj, phi);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("persistence: nondegenerate types never reduce to degenerate") {
    auto phi = make_cm_type(make_group(5), {1, 2});
    REQUIRE(character_test(phi).nondegenerate);
    for (long p : testutil::primes_below(300)) {
        if (p == 5) continue;
        auto v = character_test(phi, p);
        CHECK(v.status != ReductionStatus::Degenerate);
    }
}

TEST_CASE("consistency reports") {
    SUBCASE("m=27, p=109: both degenerate, split case passes") {
        auto phi = fermat_cm_type(27, 1, 9, 17);
        auto r = reduction_consistency(phi, 109);
        CHECK(r.split_case_applies);
        CHECK(r.split_case_ok);
        CHECK(!r.persistence_applies);  // generic fiber is degenerate
        CHECK(r.pass());
    }
    SUBCASE("m=4, p=5: both nondegenerate") {
        auto phi = make_cm_type(make_group(4), {1});
        auto r = reduction_consistency(phi, 5);
        CHECK(r.split_case_applies);
        CHECK(r.split_case_ok);
        CHECK(r.persistence_applies);
        CHECK(r.persistence_ok);
        CHECK(r.pass());
    }
    SUBCASE("m=4, p=7: vacuous reduction still passes persistence") {
        auto phi = make_cm_type(make_group(4), {1});
        auto r = reduction_consistency(phi, 7);
        CHECK(!r.split_case_applies);  // f = 2
        CHECK(r.persistence_applies);
        CHECK(r.persistence_ok);
        CHECK(r.reduction.status == ReductionStatus::VacuouslyNondegenerate);
        CHECK(r.pass());
    }
}

TEST_CASE("quotient group reductions work end to end") {
    // Degree-2 field inside Q(mu_27): kernel of order 9.
    auto full = make_group(27);
    auto h = cyclic_subgroup(*full, 4);
    auto g = make_group(27, h);
    REQUIRE(g->order() == 2);
    auto phi = make_cm_type(g, {1});
    auto generic = character_test(phi);
    CHECK(generic.nondegenerate);  // imaginary quadratic field
    for (long p : testutil::primes_below(60)) {
        if (p == 3) continue;
        auto cv = character_test(phi, p);
        auto lv = lattice_test(phi, p);
        CHECK(cv.status == lv.status);
        CHECK(cv.status != ReductionStatus::Degenerate);
    }
}
