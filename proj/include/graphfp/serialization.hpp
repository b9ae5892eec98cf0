#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphfp/element.hpp"

namespace graphfp {

// Coefficients serialize as {"re": "p/q", "im": "p/q"} with reduced fractions
// and positive denominators; a missing part reads as zero.
nlohmann::json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const nlohmann::json& j);

// Elements serialize as a list of {"re", "im", "alpha", "beta"} entries; a
// term carrying neither "re" nor "im" reads back with coefficient 1.
nlohmann::json element_to_json(const DirectedGraph& g, const Element& a);
Element element_from_json(const DirectedGraph& g, const nlohmann::json& j);

// Diagonals serialize as an object keyed by vertex id.
nlohmann::json diagonal_to_json(const DirectedGraph& g, const DiagonalElement& d);
DiagonalElement diagonal_from_json(const DirectedGraph& g, const nlohmann::json& j);

// Letter sequences read and print as [(e1,1),(e1,*)]; tokens are dotted edge
// paths or v:NAME for vertex letters, exponents are 1 or *.
std::vector<Letter> letters_from_string(const DirectedGraph& g, const std::string& text);
std::string letters_to_string(const DirectedGraph& g, const std::vector<Letter>& letters);

// Human-readable forms for tables: integers drop the /1, a zero imaginary
// part is omitted.
std::string rational_to_display(const Rational& r);
std::string coeff_to_display(const Coeff& c);

// RFC 4180 quoting.
std::string csv_field(const std::string& s);

}  // namespace graphfp
