#pragma once

#include <vector>

#include "cmnd/group.hpp"

namespace cmnd {

// CM-type: a half-system Phi picking exactly one of {g, iota*g} from every
// conjugate pair, so Phi and iota*Phi partition G.
class CMType {
  public:
    const GroupPtr& group() const { return group_; }
    const std::vector<long>& elements() const { return elements_; }
    long size() const { return static_cast<long>(elements_.size()); }

    bool contains(long g) const;
    // Characteristic function of Phi on G (0 or 1); g must be an element.
    int indicator(long g) const;

    bool operator==(const CMType& o) const {
        return same_group(*group_, *o.group_) && elements_ == o.elements_;
    }

  private:
    friend CMType make_cm_type(const GroupPtr&, std::vector<long>);

    GroupPtr group_;
    std::vector<long> elements_;    // sorted
    std::vector<char> membership_;  // indexed like group()->elements()
};

// Validates the CM-type axioms; throws NotACMType with a witness element g
// such that both or neither of g, iota*g lie in the set.
CMType make_cm_type(const GroupPtr& g, std::vector<long> elements);

// Fermat-family CM-type on (Z/mZ)^x: the units t with
// <t*a0> + <t*a1> + <t*a2> = m, where <c> is the least positive residue.
// Requires a_i != 0 mod m and a0 + a1 + a2 = 0 mod m.
CMType fermat_cm_type(long m, long a0, long a1, long a2);

// Non-unit t in 1..m-1 with every t*a_i != 0 mod m that satisfy the defining
// sum.  The CM-type itself is restricted to units; the CLI surfaces these.
std::vector<long> fermat_nonunit_solutions(long m, long a0, long a1, long a2);

// {g in G : g*Phi = Phi}; a subgroup never containing iota.
std::vector<long> translation_stabilizer(const CMType& phi);

// True iff the translation stabilizer is trivial (simple abelian variety).
bool is_primitive(const CMType& phi);

// g*Phi, again a CM-type.
CMType translate(const CMType& phi, long g);

}  // namespace cmnd
