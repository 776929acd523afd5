#include <doctest.h>

#include "plurival/lp.hpp"
#include "plurival/rng.hpp"

using namespace plurival;

namespace {

LinearProgram make_lp(LpSense sense, RationalVec obj,
                      std::vector<std::pair<RationalVec, Rational>> cons) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = std::move(obj);
  lp.constraints = std::move(cons);
  return lp;
}

}  // namespace

TEST_CASE("simplex solves the corner instance exactly") {
  // minimize u1 + u2 s.t. 2u1 >= 1, 3u2 >= 1.
  LinearProgram lp = make_lp(LpSense::minimize, {Rational(1), Rational(1)},
                             {{{Rational(2), Rational(0)}, Rational(1)},
                              {{Rational(0), Rational(3)}, Rational(1)}});
  LpResult r = lp_solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(5, 6));
  CHECK(r.point == RationalVec{Rational(1, 2), Rational(1, 3)});
}

TEST_CASE("boundary optimum at the orthant") {
  LinearProgram lp = make_lp(LpSense::minimize, {Rational(1)}, {{{Rational(1)}, Rational(0)}});
  LpResult r = lp_solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(0));
  CHECK(r.point[0] == Rational(0));
}

TEST_CASE("unbounded along a recession direction") {
  LinearProgram lp = make_lp(LpSense::maximize, {Rational(1)}, {{{Rational(1)}, Rational(1)}});
  LpResult r = lp_solve(lp);
  REQUIRE(r.status == LpStatus::unbounded);
  REQUIRE(r.ray.size() == 1);
  CHECK(r.ray[0] > Rational(0));
}

TEST_CASE("infeasible with a verified certificate") {
  // u1 >= 1 and -u1 >= 0 cannot both hold.
  LinearProgram lp = make_lp(LpSense::minimize, {Rational(1)},
                             {{{Rational(1)}, Rational(1)}, {{Rational(-1)}, Rational(0)}});
  LpResult r = lp_solve(lp);
  CHECK(r.status == LpStatus::infeasible);
  REQUIRE(r.farkas.size() == 2);
  Rational yb = r.farkas[0] * Rational(1) + r.farkas[1] * Rational(0);
  CHECK(yb > Rational(0));
}

TEST_CASE("validation and capacity errors") {
  LinearProgram lp;
  CHECK_THROWS(lp_solve(lp));  // empty objective
  lp.objective = {Rational(1), Rational(1)};
  lp.constraints.push_back({{Rational(1)}, Rational(0)});
  CHECK_THROWS(lp_solve(lp));  // dimension mismatch
  LinearProgram big;
  big.objective.assign(600, Rational(1));
  CHECK_THROWS(lp_solve(big));  // above the capacity guard
}

TEST_CASE("strong duality holds exactly on random feasible instances") {
  CounterRng rng(12345, 0);
  int solved = 0;
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 4);
    int m = 1 + static_cast<int>(rng.next_u64() % 4);
    LinearProgram lp;
    lp.objective.resize(static_cast<std::size_t>(n));
    // Positive objective keeps min LPs bounded below on the orthant.
    for (auto& c : lp.objective) c = Rational(1 + static_cast<long>(rng.next_u64() % 5),
                                              1 + static_cast<long>(rng.next_u64() % 3));
    for (int i = 0; i < m; ++i) {
      RationalVec row(static_cast<std::size_t>(n));
      for (auto& v : row) v = Rational(static_cast<long>(rng.next_u64() % 5),
                                       1 + static_cast<long>(rng.next_u64() % 3));
      lp.constraints.push_back({row, Rational(static_cast<long>(rng.next_u64() % 4))});
    }
    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::optimal) continue;
    ++solved;
    Rational yb;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
      yb += r.duals[i] * lp.constraints[i].second;
    CHECK(yb == r.value);  // primal optimum == dual optimum
    CHECK(dot(lp.objective, r.point) == r.value);
  }
  CHECK(solved > 100);
}

TEST_CASE("deterministic across repeated solves") {
  LinearProgram lp = make_lp(
      LpSense::minimize, {Rational(3, 2), Rational(1), Rational(2)},
      {{{Rational(1), Rational(1), Rational(0)}, Rational(2)},
       {{Rational(0), Rational(1), Rational(1)}, Rational(3)},
       {{Rational(1), Rational(0), Rational(2)}, Rational(1)}});
  LpResult a = lp_solve(lp);
  LpResult b = lp_solve(lp);
  CHECK(a.value == b.value);
  CHECK(a.point == b.point);
  CHECK(a.duals == b.duals);
}
