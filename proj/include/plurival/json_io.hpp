#ifndef PLURIVAL_JSON_IO_HPP
#define PLURIVAL_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "plurival/monomial_ideal.hpp"
#include "plurival/toric_weight.hpp"

namespace plurival {

using Json = nlohmann::json;

// Wire formats. Rationals travel as "p/q" strings; ideals as
//   {"dim": n, "generators": [[int,...],...]},
// toric weights as {"pieces": [["p/q",...],...], "scale": "p/q"}, diagonal
// weights as {"a": ["p/q",...], "scale": "p/q"}.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json weight_to_json(const ToricWeight& w);
ToricWeight weight_from_json(const Json& j);

Json diagonal_to_json(const DiagonalZhouWeight& w);
DiagonalZhouWeight diagonal_from_json(const Json& j);

// Comma-separated rationals ("2,3/2"); semicolon-separated piece lists
// ("2,0;0,3") for command-line weight entry.
RationalVec parse_rational_list(const std::string& text);
std::vector<Exponent> parse_piece_list(const std::string& text);

}  // namespace plurival

#endif  // PLURIVAL_JSON_IO_HPP
