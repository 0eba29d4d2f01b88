#pragma once

// JSON and DOT serialization. Rationals are written as "num/den" strings,
// permutations and root indices are 1-based.

#include "kisin/connectivity.hpp"
#include "kisin/multicopy.hpp"
#include "kisin/oracle.hpp"

#include "json.hpp"

#include <string>

namespace kisin {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

Json to_json(const Integer &z);
Json to_json(const Rational &r);
Json to_json(const Cochar &v);
Json to_json(const RatCochar &v);
Json to_json(const WeylElt &w);
Json to_json(const ExtAffine &z);
Json to_json(const Root &alpha);
Json to_json(const FrobeniusDatum &datum);
Json to_json(const Stratum &s);
Json to_json(const LaurentMatrix &m);
Json to_json(const StrataGraph &g, const Pi0Report &pi0);
Json to_json(const OmegaOneAnalysis &a);
Json to_json(const std::vector<ChainStep> &chain);

std::string to_string(Pi0Status status);
std::string to_dot(const StrataGraph &g, const Pi0Report &pi0);

/// Accepts [[...], ...] or a flat [...] for a single block.
Cochar cochar_from_json(const Json &j);
/// One-line permutations per block, 1-based; a flat list means one block.
WeylElt weyl_from_json(const Json &j);
/// "5,3,3,1", "1,0,1;0,0,1" (blocks split by ';') or a JSON array.
Json parse_vector_text(const std::string &text);

} // namespace kisin
