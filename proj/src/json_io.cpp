#include "plurival/json_io.hpp"

#include "plurival/errors.hpp"

namespace plurival {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw_validation("expected a rational as \"p/q\" string or integer");
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Exponent& g : ideal.generators()) {
    Json row = Json::array();
    for (int j = 0; j < g.dim(); ++j) row.push_back(g[j].numerator().convert_to<std::int64_t>());
    gens.push_back(row);
  }
  return Json{{"dim", ideal.dim()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
    throw_validation("ideal json needs {\"dim\", \"generators\"}");
  int dim = j.at("dim").get<int>();
  std::vector<Exponent> gens;
  for (const Json& row : j.at("generators")) {
    RationalVec c;
    for (const Json& v : row) c.push_back(rational_from_json(v));
    if (static_cast<int>(c.size()) != dim) throw_validation("ideal generator dimension mismatch");
    gens.push_back(Exponent(std::move(c)));
  }
  return MonomialIdeal(std::move(gens));
}

Json weight_to_json(const ToricWeight& w) {
  Json pieces = Json::array();
  for (const Exponent& p : w.pieces()) {
    Json row = Json::array();
    for (int j = 0; j < p.dim(); ++j) row.push_back(rational_to_json(p[j]));
    pieces.push_back(row);
  }
  return Json{{"pieces", pieces}, {"scale", rational_to_json(w.scale())}};
}

ToricWeight weight_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pieces")) throw_validation("weight json needs {\"pieces\"}");
  std::vector<Exponent> pieces;
  for (const Json& row : j.at("pieces")) {
    RationalVec c;
    for (const Json& v : row) c.push_back(rational_from_json(v));
    pieces.push_back(Exponent(std::move(c)));
  }
  Rational scale(1);
  if (j.contains("scale")) scale = rational_from_json(j.at("scale"));
  return ToricWeight(std::move(pieces), std::move(scale));
}

Json diagonal_to_json(const DiagonalZhouWeight& w) {
  Json a = Json::array();
  for (const Rational& aj : w.a()) a.push_back(rational_to_json(aj));
  return Json{{"a", a}, {"scale", rational_to_json(w.scale())}};
}

DiagonalZhouWeight diagonal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a")) throw_validation("diagonal weight json needs {\"a\"}");
  RationalVec a;
  for (const Json& v : j.at("a")) a.push_back(rational_from_json(v));
  Rational scale(1);
  if (j.contains("scale")) scale = rational_from_json(j.at("scale"));
  return DiagonalZhouWeight(std::move(a), std::move(scale));
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

RationalVec parse_rational_list(const std::string& text) {
  RationalVec out;
  for (const std::string& tok : split(text, ',')) out.push_back(Rational::parse(tok));
  return out;
}

std::vector<Exponent> parse_piece_list(const std::string& text) {
  std::vector<Exponent> out;
  for (const std::string& piece : split(text, ';')) out.push_back(Exponent(parse_rational_list(piece)));
  return out;
}

}  // namespace plurival
