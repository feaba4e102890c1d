#include "cmnd/cm_type.hpp"

#include <algorithm>
#include <sstream>

namespace cmnd {

bool CMType::contains(long g) const {
    return group_->is_element(g) && membership_[static_cast<size_t>(group_->index_of(g))] != 0;
}

int CMType::indicator(long g) const {
    return membership_[static_cast<size_t>(group_->index_of(g))] ? 1 : 0;
}

CMType make_cm_type(const GroupPtr& g, std::vector<long> elements) {
    for (long t : elements)
        if (!g->is_element(t)) {
            std::ostringstream os;
            os << "make_cm_type: " << t << " is not an element of the group";
            throw InvalidInput(os.str());
        }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    std::vector<char> membership(static_cast<size_t>(g->order()), 0);
    for (long t : elements) membership[static_cast<size_t>(g->index_of(t))] = 1;

    // Exactly one of g, iota*g in the set, for every g.
    for (long t : g->elements()) {
        bool own = membership[static_cast<size_t>(g->index_of(t))] != 0;
        bool conj = membership[static_cast<size_t>(g->index_of(g->mul(g->iota(), t)))] != 0;
        if (own == conj) {
            std::ostringstream os;
            os << "not a CM-type: " << (own ? "both" : "neither") << " of " << t << " and iota*"
               << t << " present";
            throw NotACMType(os.str(), t);
        }
    }

    CMType phi;
    phi.group_ = g;
    phi.elements_ = std::move(elements);
    phi.membership_ = std::move(membership);
    return phi;
}

namespace {

// Least positive residue of c mod m for c != 0 mod m.
long least_positive(long c, long m) {
    long r = ((c % m) + m) % m;
    return r;
}

}  // namespace

CMType fermat_cm_type(long m, long a0, long a1, long a2) {
    if (m < 3) throw InvalidInput("fermat_cm_type: modulus must be >= 3");
    long a[3] = {((a0 % m) + m) % m, ((a1 % m) + m) % m, ((a2 % m) + m) % m};
    for (long ai : a)
        if (ai == 0) throw InvalidInput("fermat_cm_type: a_i must be nonzero mod m");
    if ((a[0] + a[1] + a[2]) % m != 0)
        throw InvalidInput("fermat_cm_type: a0 + a1 + a2 must be 0 mod m");

    auto g = make_group(m);
    std::vector<long> phi;
    for (long t : g->elements()) {
        long sum = 0;
        for (long ai : a) sum += least_positive(t * ai, m);
        if (sum == m) phi.push_back(t);
    }
    return make_cm_type(g, std::move(phi));
}

std::vector<long> fermat_nonunit_solutions(long m, long a0, long a1, long a2) {
    long a[3] = {((a0 % m) + m) % m, ((a1 % m) + m) % m, ((a2 % m) + m) % m};
    std::vector<long> out;
    for (long t = 1; t < m; ++t) {
        if (gcd_long(t, m) == 1) continue;
        long sum = 0;
        bool defined = true;
        for (long ai : a) {
            long r = t * ai % m;
            if (r == 0) {
                defined = false;
                break;
            }
            sum += r;
        }
        if (defined && sum == m) out.push_back(t);
    }
    return out;
}

std::vector<long> translation_stabilizer(const CMType& phi) {
    const auto& g = *phi.group();
    std::vector<long> out;
    for (long s : g.elements()) {
        bool fixes = true;
        for (long t : phi.elements())
            if (!phi.contains(g.mul(s, t))) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(s);
    }
    return out;
}

bool is_primitive(const CMType& phi) {
    auto st = translation_stabilizer(phi);
    return st.size() == 1 && st[0] == 1;
}

CMType translate(const CMType& phi, long g) {
    const auto& grp = *phi.group();
    std::vector<long> moved;
    moved.reserve(phi.elements().size());
    for (long t : phi.elements()) moved.push_back(grp.mul(g, t));
    return make_cm_type(phi.group(), std::move(moved));
}

}  // namespace cmnd
