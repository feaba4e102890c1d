#include "cmnd/report.hpp"

#include <ostream>
#include <sstream>

namespace cmnd {

json group_json(const FinAbGroup& g) {
    json j;
    j["modulus"] = g.modulus();
    j["kernel"] = g.kernel();
    j["order"] = g.order();
    j["exponent"] = g.exponent();
    j["iota"] = g.iota();
    j["generators"] = g.base().generators;
    j["generator_orders"] = g.generator_orders();
    return j;
}

json character_json(const Character& chi) {
    json j;
    j["exponents"] = chi.exponents();
    j["value_order"] = chi.value_order();
    j["character_order"] = chi.order();
    return j;
}

json cm_type_json(const CMType& phi) {
    json j;
    j["elements"] = phi.elements();
    j["size"] = phi.size();
    auto stab = translation_stabilizer(phi);
    j["primitive"] = (stab.size() == 1);
    j["stabilizer"] = stab;
    return j;
}

json slopes_json(const SlopeFunction& s) {
    json j;
    j["denominator"] = s.denominator();
    json values = json::array();
    for (long g : s.group()->elements()) values.push_back(json::array({g, s.numerator(g)}));
    j["values"] = values;
    return j;
}

json generic_json(const GenericVerdict& char_verdict, const GenericVerdict& lattice_verdict) {
    json j;
    j["nondegenerate"] = char_verdict.nondegenerate;
    j["vanishing_count"] = char_verdict.vanishing_count;
    j["dim_L"] = char_verdict.dim_l;
    j["dim_MT"] = char_verdict.dim_mt;
    j["witness"] = char_verdict.witness ? character_json(*char_verdict.witness) : json(nullptr);
    j["hypothesis_violation"] =
        char_verdict.primitive ? json(nullptr) : json("not simple: CM-type is imprimitive");
    json oracles;
    oracles["character_test"] = char_verdict.nondegenerate ? "nondegenerate" : "degenerate";
    oracles["lattice_test"] = lattice_verdict.nondegenerate ? "nondegenerate" : "degenerate";
    oracles["agree"] = char_verdict.nondegenerate == lattice_verdict.nondegenerate &&
                       char_verdict.vanishing_count == lattice_verdict.vanishing_count &&
                       char_verdict.dim_mt == lattice_verdict.dim_mt;
    j["oracles"] = oracles;
    return j;
}

json reduction_json(const ReductionVerdict& char_verdict, const ReductionVerdict& lattice_verdict,
                    const ConsistencyReport& consistency) {
    json j;
    j["p"] = char_verdict.p;
    j["p_mod_m"] = char_verdict.p % char_verdict.slopes.group()->modulus();
    j["frobenius_order"] = char_verdict.frobenius_order;
    j["g1_order"] = static_cast<long>(char_verdict.g1.size());
    j["g1"] = char_verdict.g1;
    j["e0_degree"] = char_verdict.e0_degree;
    j["status"] = to_string(char_verdict.status);
    j["outside_cm_hypotheses"] = char_verdict.outside_cm_hypotheses;
    j["witness"] = char_verdict.witness ? character_json(*char_verdict.witness) : json(nullptr);
    j["slopes"] = slopes_json(char_verdict.slopes);
    json oracles;
    oracles["character_test"] = to_string(char_verdict.status);
    oracles["lattice_test"] = to_string(lattice_verdict.status);
    oracles["agree"] = char_verdict.status == lattice_verdict.status;
    j["oracles"] = oracles;
    json cons;
    cons["split_case"] = {{"applies", consistency.split_case_applies},
                          {"ok", consistency.split_case_applies ? json(consistency.split_case_ok)
                                                                : json(nullptr)}};
    cons["persistence"] = {{"applies", consistency.persistence_applies},
                           {"ok", consistency.persistence_applies ? json(consistency.persistence_ok)
                                                                  : json(nullptr)}};
    j["consistency"] = cons;
    return j;
}

void print_generic(std::ostream& os, const CMType& phi, const GenericVerdict& char_verdict,
                   const GenericVerdict& lattice_verdict) {
    const auto& g = *phi.group();
    os << "modulus " << g.modulus() << ", |G| = " << g.order() << ", iota = " << g.iota() << "\n";
    os << "CM-type (" << phi.size() << " elements):";
    for (long t : phi.elements()) os << " " << t;
    os << "\n";
    if (!char_verdict.primitive)
        os << "note: CM-type is imprimitive (variety not simple); criteria hypotheses violated\n";
    os << "generic fiber: " << (char_verdict.nondegenerate ? "NONDEGENERATE" : "DEGENERATE")
       << "  [character test: " << char_verdict.vanishing_count << " vanishing odd sums"
       << "; lattice test: dim L = " << lattice_verdict.dim_l
       << ", dim MT = " << lattice_verdict.dim_mt << "]\n";
    if (char_verdict.witness) {
        os << "witness: odd character of order " << char_verdict.witness->order()
           << " with exponents [";
        for (size_t i = 0; i < char_verdict.witness->exponents().size(); ++i)
            os << (i ? ", " : "") << char_verdict.witness->exponents()[i];
        os << "]\n";
    }
}

void print_reduction(std::ostream& os, const ReductionVerdict& char_verdict,
                     const ConsistencyReport& consistency) {
    os << "p = " << char_verdict.p << ": " << to_string(char_verdict.status)
       << "  [f = " << char_verdict.frobenius_order << ", |G1| = " << char_verdict.g1.size()
       << ", E0 degree = " << char_verdict.e0_degree << "]";
    if (char_verdict.outside_cm_hypotheses) os << "  (slope 1/2 everywhere; outside criteria)";
    if (consistency.split_case_applies)
        os << "  split-case check: " << (consistency.split_case_ok ? "ok" : "FAILED");
    if (consistency.persistence_applies)
        os << "  persistence check: " << (consistency.persistence_ok ? "ok" : "FAILED");
    os << "\n";
}

std::string csv_header() { return "p,p_mod_m,f,g1_order,e0_degree,status"; }

std::string csv_row(long modulus, const ReductionVerdict& v) {
    std::ostringstream os;
    os << v.p << "," << v.p % modulus << "," << v.frobenius_order << "," << v.g1.size() << ","
       << v.e0_degree << "," << to_string(v.status);
    return os.str();
}

}  // namespace cmnd
