#pragma once

// Text and JSON forms of elements, polynomials, tableaux and expansions.
//
// Text forms sort terms by degree (highest first), then by monomial key, so
// output is byte-stable. Parsers throw std::invalid_argument on malformed input.

#include <string>
#include <string_view>

#include <json.hpp>

#include "capelli/combinatorics.hpp"
#include "capelli/polyalg.hpp"
#include "capelli/ugl.hpp"

namespace capelli {

using json = nlohmann::json;

std::string to_text(const UglElement& x);
json to_json(const UglElement& x);
/// Accepts sums of c*e[i,j]e[k,l]... in any word order; words are normalized.
UglElement parse_ugl_text(std::string_view text, int n);
UglElement ugl_from_json(const json& j, int n);

std::string to_text(const MPoly& p);
json to_json(const MPoly& p);
/// Accepts sums of c*x[i,φ]^e x[k,ψ]...
MPoly parse_mpoly_text(std::string_view text, int n, int d);
MPoly mpoly_from_json(const json& j, int n, int d);

json to_json(const Partition& p);
json to_json(const YoungTableau& t);
/// Comma-separated parts, e.g. "2,1"; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
/// Comma-separated positive integers.
std::vector<int> parse_index_list(std::string_view text);
/// JSON array of row arrays, e.g. [[1,2],[1]].
YoungTableau parse_tableau(std::string_view text);
YoungTableau tableau_from_json(const json& j);

std::string to_text(const StdExpansion& e);
json to_json(const StdExpansion& e);
StdExpansion expansion_from_json(const json& j);

}  // namespace capelli
