#pragma once

#include <optional>

#include "cmnd/cm_type.hpp"
#include "cmnd/matrix.hpp"

namespace cmnd {

// Verdict on whether all powers of the CM abelian variety in characteristic
// zero are nondegenerate (every Hodge class on every power a polynomial in
// divisor classes).
struct GenericVerdict {
    bool nondegenerate = false;
    // First odd character with vanishing Phi-sum, in enumeration order.
    // Only the character test produces one.
    std::optional<Character> witness;
    long vanishing_count = 0;
    long dim_l = 0;   // rank of the Lefschetz character lattice: |G|/2 + 1
    long dim_mt = 0;  // rank of the Mumford-Tate character lattice
    bool primitive = false;  // the tests assume a simple variety; flagged if not
};

// Exact value of sum_{sigma in Phi} chi(sigma) in Z[zeta_e].
CycInt character_sum(const Character& chi, const CMType& phi);

// Character criterion: nondegenerate iff no odd character has vanishing
// Phi-sum.  dim_mt is derived from the vanishing count.
GenericVerdict character_test(const CMType& phi);

// Lattice criterion: builds the |G| x |G| matrix M[t][s] = phi(t^{-1} s) of
// the Mumford-Tate triviality condition and compares its kernel rank with
// the rank |G|/2 - 1 of the Lefschetz relation lattice.
GenericVerdict lattice_test(const CMType& phi);

// The condition matrix behind lattice_test, exposed for tests and the
// benchmark.
IntMatrix mt_condition_matrix(const CMType& phi);

}  // namespace cmnd
