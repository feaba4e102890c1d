#pragma once

#include <optional>

#include "cmnd/generic.hpp"

namespace cmnd {

// Exact rational-valued slope function of the Frobenius germ at the primes
// above p, stored as integer numerators over the single denominator
// f = |G_p|.  s(tau) is the slope at the translated prime tau*p.
class SlopeFunction {
  public:
    SlopeFunction() = default;  // empty placeholder; not usable until assigned
    SlopeFunction(GroupPtr group, long denom, std::vector<i64> numer);

    const GroupPtr& group() const { return group_; }
    long denominator() const { return denom_; }  // f = |G_p|
    i64 numerator(long g) const;                 // g must be an element
    const std::vector<i64>& numerators() const { return numer_; }

    bool operator==(const SlopeFunction& o) const {
        return same_group(*group_, *o.group_) && denom_ == o.denom_ && numer_ == o.numer_;
    }

  private:
    GroupPtr group_;
    long denom_ = 1;
    std::vector<i64> numer_;  // indexed like group()->elements(), values in 0..f
};

// Decomposition group of the primes above p: the cyclic subgroup generated
// by the Frobenius p mod m.  p must be prime; p | m is rejected as ramified.
std::vector<long> decomposition_subgroup(const FinAbGroup& g, long p);

// Slope via averaging the CM-type indicator over the decomposition group:
// numer(tau) = #{h in G_p : h * tau^{-1} in Phi}.
SlopeFunction slope_by_average(const CMType& phi, long p);

// Slope via the classical coset description (Shimura-Taniyama): partitions G
// into G_p-cosets and counts CM-type members in the coset attached to each
// translated prime.  Independent code path from slope_by_average.
SlopeFunction slope_by_cosets(const CMType& phi, long p);

// G_1 = {g : s(tau*g) = s(tau) for all tau}: the Galois elements fixing the
// Frobenius germ.  Always contains the decomposition group.
std::vector<long> germ_stabilizer(const SlopeFunction& s);

enum class ReductionStatus {
    Nondegenerate,
    Degenerate,
    // iota fixes the germ (slope identically 1/2): the center of the
    // reduction's endomorphism algebra is totally real, and the odd-character
    // criterion has no characters to test.  Reported with an explicit flag,
    // never as a plain verdict.
    VacuouslyNondegenerate,
};

const char* to_string(ReductionStatus s);

// Verdict on whether all powers of the simple reduction factor at p are
// nondegenerate (every Tate class on every power a polynomial in divisor
// classes).
struct ReductionVerdict {
    long p = 0;
    long frobenius_order = 0;  // f = |G_p|
    std::vector<long> g1;      // germ stabilizer
    long e0_degree = 0;        // |G| / |G_1|, degree of the reduction's center
    ReductionStatus status = ReductionStatus::Nondegenerate;
    std::optional<Character> witness;  // character test only
    SlopeFunction slopes;
    bool outside_cm_hypotheses = false;  // true iff VacuouslyNondegenerate
};

// Character criterion for the reduction: nondegenerate iff
// sum_{tau in G} numer(tau) * chi(tau) != 0 for every odd character trivial
// on G_1 (the f-scaled, |G_1|-fold redundant form of the slope-weighted sum
// over G_0).  Slopes come from slope_by_average.
ReductionVerdict character_test(const CMType& phi, long p);

// Lattice criterion for the reduction: over G_0 = G/G_1 with the induced
// slope, builds M[t][s] = f * s0(s^{-1} t) and compares its kernel rank with
// |G_0|/2 - 1.  Slopes come from slope_by_cosets, so the two reduction
// oracles share no slope code.
ReductionVerdict lattice_test(const CMType& phi, long p);

// The condition matrix behind the reduction lattice test.
IntMatrix p_condition_matrix(const CMType& phi, long p);

// Consistency of the generic and reduction verdicts:
//  - split case: when f = 1 and Phi is primitive the two verdicts must be
//    equal;
//  - persistence: when the generic fiber is nondegenerate, no reduction may
//    come out Degenerate.
struct ConsistencyReport {
    long p = 0;
    bool split_case_applies = false;
    bool split_case_ok = true;
    bool persistence_applies = false;
    bool persistence_ok = true;
    GenericVerdict generic;
    ReductionVerdict reduction;

    bool pass() const { return split_case_ok && persistence_ok; }
};

ConsistencyReport reduction_consistency(const CMType& phi, long p);

}  // namespace cmnd
