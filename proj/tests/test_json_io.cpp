#include <doctest.h>

#include "plurival/json_io.hpp"
#include "plurival/rng.hpp"

using namespace plurival;

TEST_CASE("ideal wire format") {
  MonomialIdeal ideal({Exponent({Rational(2), Rational(0)}), Exponent({Rational(0), Rational(3)})});
  Json j = ideal_to_json(ideal);
  CHECK(j.at("dim") == 2);
  CHECK(ideal_from_json(j) == ideal);
  CHECK_THROWS(ideal_from_json(Json{{"dim", 2}}));
  CHECK_THROWS(ideal_from_json(Json::parse(R"({"dim":2,"generators":[[1]]})")));
}

TEST_CASE("weight wire format round trips as germs") {
  CounterRng rng(7, 0);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 3);
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) {
      RationalVec c(static_cast<std::size_t>(n));
      bool nz = false;
      for (auto& x : c) {
        x = Rational(static_cast<long>(rng.next_u64() % 4), 1 + static_cast<long>(rng.next_u64() % 3));
        nz = nz || !x.is_zero();
      }
      if (!nz) c[0] = Rational(1);
      pieces.push_back(Exponent(std::move(c)));
    }
    ToricWeight w(pieces, Rational(1 + static_cast<long>(rng.next_u64() % 3),
                                   1 + static_cast<long>(rng.next_u64() % 3)));
    ToricWeight back = weight_from_json(weight_to_json(w));
    CHECK(back.pieces() == w.pieces());
    CHECK(back.scale() == w.scale());
  }
}

TEST_CASE("diagonal weight wire format") {
  DiagonalZhouWeight w({Rational(3), Rational(3, 2)}, Rational(5, 4));
  Json j = diagonal_to_json(w);
  DiagonalZhouWeight back = diagonal_from_json(j);
  CHECK(back == w);
  CHECK_THROWS(diagonal_from_json(Json::parse(R"({"a":["2","3"]})")));  // constraint violated
}

TEST_CASE("cli list parsing") {
  RationalVec v = parse_rational_list("2,3/2, 1/4");
  CHECK(v == RationalVec{Rational(2), Rational(3, 2), Rational(1, 4)});
  auto pieces = parse_piece_list("2,0;0,3");
  CHECK(pieces.size() == 2);
  CHECK(pieces[0] == Exponent({Rational(2), Rational(0)}));
  CHECK_THROWS(parse_rational_list("2,,3"));
}
