#include "cmnd/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "cmnd/charsum.hpp"

namespace cmnd {

SlopeFunction::SlopeFunction(GroupPtr group, long denom, std::vector<i64> numer)
    : group_(std::move(group)), denom_(denom), numer_(std::move(numer)) {
    if (group_ && static_cast<long>(numer_.size()) != group_->order())
        throw InvalidInput("SlopeFunction: one numerator per group element required");
}

i64 SlopeFunction::numerator(long g) const { return numer_[static_cast<size_t>(group_->index_of(g))]; }

std::vector<long> decomposition_subgroup(const FinAbGroup& g, long p) {
    if (!is_prime(p)) throw InvalidInput("decomposition_subgroup: p must be prime");
    if (g.modulus() % p == 0) {
        std::ostringstream os;
        os << "prime " << p << " ramifies (divides the modulus " << g.modulus() << ")";
        throw RamifiedPrime(os.str(), p);
    }
    return cyclic_subgroup(g, g.canon(p % g.modulus()));
}

SlopeFunction slope_by_average(const CMType& phi, long p) {
    const auto& g = *phi.group();
    auto gp = decomposition_subgroup(g, p);
    const long f = static_cast<long>(gp.size());

    std::vector<i64> numer(static_cast<size_t>(g.order()), 0);
    for (long i = 0; i < g.order(); ++i) {
        long tinv = g.inv(g.at(i));
        i64 count = 0;
        for (long h : gp)
            if (phi.contains(g.mul(h, tinv))) ++count;
        numer[static_cast<size_t>(i)] = count;
    }
    return SlopeFunction(phi.group(), f, std::move(numer));
}

SlopeFunction slope_by_cosets(const CMType& phi, long p) {
    const auto& g = *phi.group();
    auto gp = decomposition_subgroup(g, p);
    const long f = static_cast<long>(gp.size());

    // Partition G into G_p-cosets; each coset is the set of embeddings
    // attached to one prime above p, and the slope there is the proportion
    // of CM-type members in it.  The slope is indexed so that s(tau) is the
    // slope at the translated prime tau*p, whose coset is G_p * tau^{-1}.
    std::vector<i64> numer(static_cast<size_t>(g.order()), -1);
    std::vector<char> visited(static_cast<size_t>(g.order()), 0);
    for (long i = 0; i < g.order(); ++i) {
        if (visited[static_cast<size_t>(i)]) continue;
        std::vector<long> coset;
        for (long h : gp) coset.push_back(g.mul(h, g.at(i)));
        i64 members = 0;
        for (long x : coset) {
            visited[static_cast<size_t>(g.index_of(x))] = 1;
            if (phi.contains(x)) ++members;
        }
        for (long x : coset) numer[static_cast<size_t>(g.index_of(g.inv(x)))] = members;
    }
    return SlopeFunction(phi.group(), f, std::move(numer));
}

std::vector<long> germ_stabilizer(const SlopeFunction& s) {
    const auto& g = *s.group();
    std::vector<long> out;
    for (long a : g.elements()) {
        bool fixes = true;
        for (long t : g.elements())
            if (s.numerator(g.mul(t, a)) != s.numerator(t)) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(a);
    }
    return out;
}

const char* to_string(ReductionStatus s) {
    switch (s) {
        case ReductionStatus::Nondegenerate: return "nondegenerate";
        case ReductionStatus::Degenerate: return "degenerate";
        case ReductionStatus::VacuouslyNondegenerate: return "vacuously_nondegenerate";
    }
    return "unknown";
}

namespace {

ReductionVerdict make_base_verdict(const CMType& phi, long p, SlopeFunction slopes) {
    ReductionVerdict v{.p = p,
                       .frobenius_order = slopes.denominator(),
                       .g1 = germ_stabilizer(slopes),
                       .e0_degree = 0,
                       .status = ReductionStatus::Nondegenerate,
                       .witness = std::nullopt,
                       .slopes = std::move(slopes),
                       .outside_cm_hypotheses = false};
    const auto& g = *phi.group();
    v.e0_degree = g.order() / static_cast<long>(v.g1.size());
    if (std::binary_search(v.g1.begin(), v.g1.end(), g.iota())) {
        // Slope identically 1/2: no odd characters survive, nothing to test.
        v.status = ReductionStatus::VacuouslyNondegenerate;
        v.outside_cm_hypotheses = true;
    }
    return v;
}

}  // namespace

ReductionVerdict character_test(const CMType& phi, long p) {
    auto v = make_base_verdict(phi, p, slope_by_average(phi, p));
    if (v.status == ReductionStatus::VacuouslyNondegenerate) return v;

    const auto& g = *phi.group();
    auto odd = odd_characters(phi.group());
    std::vector<Character> testable;
    for (auto& chi : odd) {
        bool trivial_on_g1 = true;
        for (long h : v.g1)
            if (chi.zeta_exponent(h) != 0) {
                trivial_on_g1 = false;
                break;
            }
        if (trivial_on_g1) testable.push_back(std::move(chi));
    }

    auto sums = weighted_character_sums(g, v.slopes.numerators(), testable);
    for (size_t i = 0; i < sums.size(); ++i) {
        if (sums[i].is_zero()) {
            v.status = ReductionStatus::Degenerate;
            v.witness = testable[i];
            break;
        }
    }
    return v;
}

IntMatrix p_condition_matrix(const CMType& phi, long p) {
    const auto& g = *phi.group();
    auto slopes = slope_by_cosets(phi, p);
    auto g1 = germ_stabilizer(slopes);
    if (std::binary_search(g1.begin(), g1.end(), g.iota()))
        throw InvalidInput("p_condition_matrix: iota fixes the germ, no lattice test applies");

    // G_0 = G / G_1, realized as a quotient of (Z/mZ)^x by the preimage of
    // G_1.  The induced slope is well-defined by G_1-invariance.
    std::vector<long> preimage;
    for (long r = 1; r < g.modulus(); ++r) {
        if (gcd_long(r, g.modulus()) != 1) continue;
        if (std::binary_search(g1.begin(), g1.end(), g.canon(r))) preimage.push_back(r);
    }
    auto g0 = make_group(g.modulus(), std::move(preimage));

    const long n0 = g0->order();
    IntMatrix m(n0, n0);
    for (long t = 0; t < n0; ++t)
        for (long s = 0; s < n0; ++s) {
            long x = g0->mul(g0->inv(g0->at(s)), g0->at(t));
            m.at(t, s) = slopes.numerator(g.canon(x));
        }
    return m;
}

ReductionVerdict lattice_test(const CMType& phi, long p) {
    auto v = make_base_verdict(phi, p, slope_by_cosets(phi, p));
    if (v.status == ReductionStatus::VacuouslyNondegenerate) return v;

    IntMatrix m = p_condition_matrix(phi, p);
    const long n0 = m.rows();
    long k = kernel_rank(m);
    v.status = (k == n0 / 2 - 1) ? ReductionStatus::Nondegenerate : ReductionStatus::Degenerate;
    return v;
}

ConsistencyReport reduction_consistency(const CMType& phi, long p) {
    ConsistencyReport r;
    r.p = p;
    r.generic = character_test(phi);
    r.reduction = character_test(phi, p);

    r.split_case_applies = (r.reduction.frobenius_order == 1 && r.generic.primitive);
    if (r.split_case_applies) {
        bool red_nondeg = r.reduction.status == ReductionStatus::Nondegenerate;
        r.split_case_ok = (r.generic.nondegenerate == red_nondeg);
    }

    r.persistence_applies = r.generic.nondegenerate;
    if (r.persistence_applies)
        r.persistence_ok = (r.reduction.status != ReductionStatus::Degenerate);
    return r;
}

}  // namespace cmnd
