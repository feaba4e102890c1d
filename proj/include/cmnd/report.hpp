#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "cmnd/reduction.hpp"

namespace cmnd {

// All reports use insertion-ordered JSON so that identical inputs produce
// byte-identical output.
using json = nlohmann::ordered_json;

json group_json(const FinAbGroup& g);
json character_json(const Character& chi);
json cm_type_json(const CMType& phi);
json slopes_json(const SlopeFunction& s);

// Merged view of the two generic oracles (witness comes from the character
// test; the pair must agree before this is called).
json generic_json(const GenericVerdict& char_verdict, const GenericVerdict& lattice_verdict);

json reduction_json(const ReductionVerdict& char_verdict,
                    const ReductionVerdict& lattice_verdict,
                    const ConsistencyReport& consistency);

// Human-readable one-screen summaries.
void print_generic(std::ostream& os, const CMType& phi, const GenericVerdict& char_verdict,
                   const GenericVerdict& lattice_verdict);
void print_reduction(std::ostream& os, const ReductionVerdict& char_verdict,
                     const ConsistencyReport& consistency);

// RFC-4180 CSV for the scan command.
std::string csv_header();
std::string csv_row(long modulus, const ReductionVerdict& v);

}  // namespace cmnd
