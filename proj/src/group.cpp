#include "cmnd/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cmnd {

bool FinAbGroup::is_element(long g) const {
    return g >= 0 && g < modulus() && canon_[static_cast<size_t>(g)] == g;
}

long FinAbGroup::index_of(long g) const {
    if (!is_element(g)) throw InvalidInput("index_of: not an element of the group");
    return index_[static_cast<size_t>(g)];
}

long FinAbGroup::canon(long r) const {
    r = ((r % modulus()) + modulus()) % modulus();
    long c = canon_[static_cast<size_t>(r)];
    if (c < 0) throw InvalidInput("canon: residue not coprime to the modulus");
    return c;
}

long FinAbGroup::mul(long a, long b) const {
    if (!is_element(a) || !is_element(b)) throw InvalidInput("mul: not an element of the group");
    return canon_[static_cast<size_t>(a * b % modulus())];
}

long FinAbGroup::inv(long a) const {
    if (!is_element(a)) throw InvalidInput("inv: not an element of the group");
    return canon_[static_cast<size_t>(inverse_mod(a, modulus()))];
}

long FinAbGroup::order_of(long a) const {
    if (!is_element(a)) throw InvalidInput("order_of: not an element of the group");
    long x = a, d = 1;
    while (x != 1) {
        x = mul(x, a);
        ++d;
    }
    return d;
}

GroupPtr make_group(long m, std::vector<long> kernel) {
    auto g = std::make_shared<FinAbGroup>();
    g->base_ = unit_group_structure(m);

    // Normalize and validate the kernel.
    for (auto& r : kernel) {
        r = ((r % m) + m) % m;
        if (gcd_long(r, m) != 1)
            throw InvalidInput("make_group: kernel residue not coprime to the modulus");
    }
    std::sort(kernel.begin(), kernel.end());
    kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
    if (kernel.empty() || kernel.front() != 1)
        throw InvalidInput("make_group: kernel must contain 1");
    for (long a : kernel)
        for (long b : kernel) {
            long ab = a * b % m;
            if (!std::binary_search(kernel.begin(), kernel.end(), ab)) {
                std::ostringstream os;
                os << "make_group: kernel is not a subgroup (" << a << "*" << b << " escapes)";
                throw InvalidInput(os.str());
            }
        }
    if (std::binary_search(kernel.begin(), kernel.end(), m - 1))
        throw InvalidCMField("make_group: kernel contains -1, fixed field is not CM");
    g->kernel_ = std::move(kernel);

    // Canonical representative of each coset: the smallest residue in it.
    g->canon_.assign(static_cast<size_t>(m), -1);
    for (long r = 1; r < m; ++r) {
        if (gcd_long(r, m) != 1) continue;
        long best = r;
        for (long h : g->kernel_) best = std::min(best, r * h % m);
        g->canon_[static_cast<size_t>(r)] = best;
    }
    std::set<long> reps;
    for (long r = 1; r < m; ++r)
        if (g->canon_[static_cast<size_t>(r)] >= 0) reps.insert(g->canon_[static_cast<size_t>(r)]);
    g->elements_.assign(reps.begin(), reps.end());

    g->index_.assign(static_cast<size_t>(m), -1);
    for (size_t i = 0; i < g->elements_.size(); ++i)
        g->index_[static_cast<size_t>(g->elements_[i])] = static_cast<long>(i);

    g->iota_ = g->canon_[static_cast<size_t>(m - 1)];

    g->exponent_ = 1;
    for (long gen : g->base_.generators) {
        long o = g->order_of(g->canon(gen));
        g->gen_orders_.push_back(o);
        g->exponent_ = lcm_long(g->exponent_, o);
    }
    return g;
}

bool same_group(const FinAbGroup& a, const FinAbGroup& b) {
    return a.modulus() == b.modulus() && a.kernel() == b.kernel();
}

std::vector<long> cyclic_subgroup(const FinAbGroup& g, long a) {
    if (!g.is_element(a)) throw InvalidInput("cyclic_subgroup: not an element of the group");
    std::vector<long> out = {1};
    long x = a;
    while (x != 1) {
        out.push_back(x);
        x = g.mul(x, a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> generated_subgroup(const FinAbGroup& g, std::span<const long> s) {
    std::set<long> closure = {1};
    for (long a : s)
        if (!g.is_element(a)) throw InvalidInput("generated_subgroup: not an element of the group");
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> cur(closure.begin(), closure.end());
        for (long x : cur)
            for (long a : s) {
                long y = g.mul(x, a);
                if (closure.insert(y).second) grew = true;
            }
    }
    return {closure.begin(), closure.end()};
}

Character::Character(GroupPtr group, std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& orders = group_->generator_orders();
    if (exponents_.size() != orders.size())
        throw InvalidInput("Character: one exponent per generator required");
    value_order_ = group_->exponent();
    for (size_t i = 0; i < exponents_.size(); ++i) {
        exponents_[i] = ((exponents_[i] % orders[i]) + orders[i]) % orders[i];
        zeta_mults_.push_back(value_order_ / orders[i]);
    }
}

long Character::lifted_zeta_exponent(long r) const {
    r = ((r % group_->modulus()) + group_->modulus()) % group_->modulus();
    const auto& dlog = group_->base().dlog[static_cast<size_t>(r)];
    if (r != 1 && dlog.empty())
        throw InvalidInput("Character: residue not coprime to the modulus");
    long k = 0;
    for (size_t i = 0; i < exponents_.size(); ++i)
        k = (k + exponents_[i] * zeta_mults_[i] % value_order_ * dlog[i]) % value_order_;
    return k;
}

long Character::zeta_exponent(long g) const {
    if (!group_->is_element(g)) throw InvalidInput("Character: not an element of the group");
    return lifted_zeta_exponent(g);
}

CycInt Character::operator()(long g) const { return zeta_power(value_order_, zeta_exponent(g)); }

bool Character::is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](long e) { return e == 0; });
}

bool Character::is_odd() const { return zeta_exponent(group_->iota()) * 2 == value_order_; }

long Character::order() const {
    long o = 1;
    const auto& orders = group_->generator_orders();
    for (size_t i = 0; i < exponents_.size(); ++i)
        o = lcm_long(o, orders[i] / gcd_long(orders[i], exponents_[i]));
    return o;
}

CycInt evaluate(const Character& chi, long g) { return chi(g); }

std::vector<Character> enumerate_characters(const GroupPtr& g) {
    const auto& orders = g->generator_orders();
    std::vector<Character> out;
    std::vector<long> exps(orders.size(), 0);
    bool done = false;
    while (!done) {
        Character chi(g, exps);
        // Keep the character iff its lift is trivial on the kernel, i.e. it
        // descends from (Z/mZ)^x to G.
        bool descends = true;
        for (long h : g->kernel())
            if (chi.lifted_zeta_exponent(h) != 0) {
                descends = false;
                break;
            }
        if (descends) out.push_back(std::move(chi));

        // Next exponent tuple in lexicographic order (rightmost fastest).
        done = true;
        for (size_t pos = exps.size(); pos-- > 0;) {
            if (++exps[pos] < orders[pos]) {
                done = false;
                break;
            }
            exps[pos] = 0;
        }
    }
    if (static_cast<long>(out.size()) != g->order())
        throw Error("enumerate_characters: wrong character count");
    return out;
}

std::vector<Character> odd_characters(const GroupPtr& g) {
    std::vector<Character> out;
    for (auto& chi : enumerate_characters(g))
        if (chi.is_odd()) out.push_back(std::move(chi));
    return out;
}

std::vector<Character> characters_trivial_on(const GroupPtr& g, std::span<const long> s) {
    auto subgroup = generated_subgroup(*g, s);
    std::vector<Character> out;
    for (auto& chi : enumerate_characters(g)) {
        bool trivial = true;
        for (long h : subgroup)
            if (chi.zeta_exponent(h) != 0) {
                trivial = false;
                break;
            }
        if (trivial) out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace cmnd
