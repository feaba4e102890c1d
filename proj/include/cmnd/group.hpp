#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cmnd/arith.hpp"

namespace cmnd {

class FinAbGroup;
using GroupPtr = std::shared_ptr<const FinAbGroup>;

// Galois group G = (Z/mZ)^x / H of an abelian CM field inside Q(mu_m), with
// distinguished complex conjugation iota = class of -1.  Elements are the
// smallest residue in each H-coset; all values are immutable after
// construction, so concurrent use needs no coordination.
class FinAbGroup {
  public:
    long modulus() const { return base_.modulus; }
    const UnitGroupPresentation& base() const { return base_; }
    const std::vector<long>& kernel() const { return kernel_; }
    const std::vector<long>& elements() const { return elements_; }
    long order() const { return static_cast<long>(elements_.size()); }
    long iota() const { return iota_; }
    long exponent() const { return exponent_; }

    // Image orders of the base generators in G; character exponents are
    // taken modulo these.
    const std::vector<long>& generator_orders() const { return gen_orders_; }

    bool is_element(long g) const;
    long index_of(long g) const;  // position in elements(); g must be an element
    long at(long i) const { return elements_[i]; }

    long canon(long r) const;  // unit residue -> canonical coset representative
    long mul(long a, long b) const;
    long inv(long a) const;
    long order_of(long a) const;

  private:
    friend GroupPtr make_group(long m, std::vector<long> kernel);

    UnitGroupPresentation base_;
    std::vector<long> kernel_;    // H, sorted, contains 1
    std::vector<long> elements_;  // canonical reps, sorted ascending
    std::vector<long> canon_;     // residue -> canonical rep (-1 for non-units)
    std::vector<long> index_;     // canonical rep -> index in elements_
    long iota_ = 0;
    long exponent_ = 1;
    std::vector<long> gen_orders_;
};

// Builds (Z/mZ)^x / H.  H must be a subgroup containing 1 and not containing
// -1 mod m (otherwise the fixed field is not CM).
GroupPtr make_group(long m, std::vector<long> kernel = {1});

bool same_group(const FinAbGroup& a, const FinAbGroup& b);

// <a> as a sorted set; a must be an element of G.
std::vector<long> cyclic_subgroup(const FinAbGroup& g, long a);

// Subgroup generated by S (sorted); every member of S must be an element.
std::vector<long> generated_subgroup(const FinAbGroup& g, std::span<const long> s);

// Character of G with values in mu_e, e = exponent(G), stored as one
// exponent per base generator: chi(g_i) = zeta_{o_i}^{exponents[i]} where
// o_i is the generator's image order in G.
class Character {
  public:
    Character(GroupPtr group, std::vector<long> exponents);

    const GroupPtr& group() const { return group_; }
    const std::vector<long>& exponents() const { return exponents_; }
    long value_order() const { return value_order_; }

    // k with chi(g) = zeta_e^k; g must be an element of the group.
    long zeta_exponent(long g) const;
    CycInt operator()(long g) const;

    // Value of the character lifted to (Z/mZ)^x at any unit residue.  Agrees
    // with zeta_exponent on canonical representatives iff the lift is
    // trivial on the kernel.
    long lifted_zeta_exponent(long r) const;

    bool is_trivial() const;
    bool is_odd() const;  // chi(iota) = -1
    long order() const;   // order in the dual group

    bool operator==(const Character& o) const {
        return same_group(*group_, *o.group_) && exponents_ == o.exponents_;
    }

  private:
    GroupPtr group_;
    std::vector<long> exponents_;
    std::vector<long> zeta_mults_;  // e / o_i per generator
    long value_order_ = 1;
};

CycInt evaluate(const Character& chi, long g);

// All |G| characters in lexicographic order of their exponent vectors.
std::vector<Character> enumerate_characters(const GroupPtr& g);

// The |G|/2 characters with chi(iota) = -1, in enumeration order.
std::vector<Character> odd_characters(const GroupPtr& g);

// Characters trivial on the subgroup generated by S, in enumeration order.
std::vector<Character> characters_trivial_on(const GroupPtr& g, std::span<const long> s);

}  // namespace cmnd
