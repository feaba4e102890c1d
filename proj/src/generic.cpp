#include "cmnd/generic.hpp"

#include "cmnd/charsum.hpp"

namespace cmnd {

CycInt character_sum(const Character& chi, const CMType& phi) {
    if (!same_group(*chi.group(), *phi.group()))
        throw InvalidInput("character_sum: character and CM-type over different groups");
    CycInt acc = CycInt::zero(chi.value_order());
    for (long sigma : phi.elements()) acc = acc + chi(sigma);
    return acc;
}

GenericVerdict character_test(const CMType& phi) {
    const auto& g = *phi.group();
    auto odd = odd_characters(phi.group());

    std::vector<i64> weights(static_cast<size_t>(g.order()), 0);
    for (long t : phi.elements()) weights[static_cast<size_t>(g.index_of(t))] = 1;
    auto sums = weighted_character_sums(g, weights, odd);

    GenericVerdict v;
    for (size_t i = 0; i < sums.size(); ++i) {
        if (sums[i].is_zero()) {
            ++v.vanishing_count;
            if (!v.witness) v.witness = odd[i];
        }
    }
    v.nondegenerate = (v.vanishing_count == 0);
    v.dim_l = g.order() / 2 + 1;
    // The condition matrix diagonalizes under the translation action, so the
    // vanishing count determines the Mumford-Tate lattice rank directly.
    v.dim_mt = v.dim_l - v.vanishing_count;
    v.primitive = is_primitive(phi);
    return v;
}

IntMatrix mt_condition_matrix(const CMType& phi) {
    const auto& g = *phi.group();
    const long n = g.order();
    IntMatrix m(n, n);
    for (long t = 0; t < n; ++t) {
        long tinv = g.inv(g.at(t));
        for (long s = 0; s < n; ++s) m.at(t, s) = phi.indicator(g.mul(tinv, g.at(s)));
    }
    return m;
}

GenericVerdict lattice_test(const CMType& phi) {
    const auto& g = *phi.group();
    const long n = g.order();
    const long relation_rank = n / 2 - 1;  // rank of {h : h = iota h, sum h = 0}

    long k = kernel_rank(mt_condition_matrix(phi));

    GenericVerdict v;
    v.nondegenerate = (k == relation_rank);
    v.dim_l = n - relation_rank;
    v.dim_mt = n - k;
    v.vanishing_count = k - relation_rank;
    v.primitive = is_primitive(phi);
    return v;
}

}  // namespace cmnd
