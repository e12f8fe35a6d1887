// JSON and text serialization for squares, pairs, incidences,
// classification reports, certificates and realization verdicts.
#pragma once

#include <string>

#include "json.hpp"
#include "netforge/combinat.hpp"
#include "netforge/equivalence.hpp"
#include "netforge/groebner.hpp"
#include "netforge/net.hpp"
#include "netforge/realization.hpp"

namespace netforge::serialization {

using json = nlohmann::json;

// {"order": k, "grid": [[...], ...]} with 1-based symbols
json square_to_json(const combinat::LatinSquare& L);
combinat::LatinSquare square_from_json(const json& j);

// {"order": k, "first": {...}, "second": {...}}
json pair_to_json(const combinat::OlsPair& p);
combinat::OlsPair pair_from_json(const json& j);

// {"k": k, "points": [[a1,a2,a3,a4], ...]}
json incidence_to_json(const net::NetIncidence& n);
net::NetIncidence incidence_from_json(const json& j);

// plain-text 4-column format, one point per line
std::string incidence_to_text(const net::NetIncidence& n);
net::NetIncidence incidence_from_text(const std::string& text);

// {"k", "total_pairs", "classes": [{"class_id", "representative",
//  "orbit_size", "rejected_moves"}], "resolved_open_bound"?}
json classification_to_json(const equivalence::Classification& c);
std::string classification_to_csv(const equivalence::Classification& c);

// {"modulus": "x^2 + x + 1", "k", "rows": [["1","w","-w - 1"], ...]},
// entries as polynomials in the generator symbol w
json certificate_to_json(const realization::CertificateMatrix& m);
realization::CertificateMatrix certificate_from_json(const json& j);

// {"k", "class_id", "outcome", "certificate"?, "trace", "reason"?}
json verdict_to_json(int k, const std::string& class_id,
                     const realization::RealizationVerdict& v);

// {"variables": [...], "generators": ["3/2*t^2*r - 1", ...]}
json ideal_to_json(const algebra::Ideal& ideal);
algebra::Ideal ideal_from_json(const json& j);

std::string outcome_to_string(realization::Outcome o);

// Parses the polynomial text format restricted to the single variable
// `var` (constants allowed).
algebra::UniPoly unipoly_from_text(const std::string& text, const std::string& var);

}  // namespace netforge::serialization
