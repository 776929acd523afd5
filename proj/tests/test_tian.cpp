#include <doctest.h>

#include "plurival/integrability.hpp"
#include "plurival/rng.hpp"
#include "plurival/tian.hpp"

using namespace plurival;

namespace {

Exponent e2(long a, long b) { return Exponent({Rational(a), Rational(b)}); }

DiagonalZhouWeight phi22() { return DiagonalZhouWeight({Rational(2), Rational(2)}); }

TianQuery query_of(const Exponent& f, const ToricWeight& weight) {
  return TianQuery(Exponent::zero(2), ToricWeight::zero(2), ToricWeight::monomial(f), weight);
}

}  // namespace

TEST_CASE("piecewise-linear container") {
  TianFunction f({Rational(-1), Rational(0), Rational(2)}, {Rational(0), Rational(1), Rational(2)});
  CHECK(f.evaluate(Rational(-1, 2)) == Rational(1, 2));
  CHECK(f.evaluate(Rational(1)) == Rational(3, 2));
  CHECK(f.value_at_0() == Rational(1));
  CHECK(f.is_concave());
  CHECK(f.derivative(Rational(0), Side::left) == Rational(1));
  CHECK(f.derivative(Rational(0), Side::right) == Rational(1, 2));
  CHECK_THROWS(f.evaluate(Rational(3)));
  CHECK_THROWS((void)TianFunction({Rational(0), Rational(0)}, {Rational(1), Rational(1)}));
}

TEST_CASE("Tn is linear for the diagonal weight twisted by a monomial") {
  // Tn(t) = 1 + t/2 for psi = log|z1| against Phi_(2,2).
  TianQuery q = query_of(e2(1, 0), phi22().to_toric());
  TianFunction f = tian_function(q, Rational(0), Rational(4));
  CHECK(f.value_at_0() == Rational(1));
  CHECK(f.slopes().size() == 1);
  CHECK(f.slopes()[0] == Rational(1, 2));
  CHECK(f.evaluate(Rational(4)) == Rational(3));
  // Negative side continues linearly down to the integrability boundary.
  TianFunction g = tian_function(q, Rational(-1, 2), Rational(4));
  CHECK(g.slopes().size() == 1);
  CHECK(g.evaluate(Rational(-1, 2)) == Rational(3, 4));
  CHECK(derivative_at_zero(g, Side::left) == Rational(1, 2));
  CHECK(derivative_at_zero(g, Side::right) == Rational(1, 2));
}

TEST_CASE("Tn(0) is the plain jumping number") {
  TianQuery q = query_of(e2(1, 0), ToricWeight({e2(2, 0), e2(0, 3)}));
  TianFunction f = tian_function(q, Rational(0), Rational(2));
  CHECK(f.value_at_0() == Rational(5, 6));
  CHECK(f.value_at_0() == lct(ToricWeight({e2(2, 0), e2(0, 3)})));
  CHECK(f.is_concave());
  // Slope at 0+ agrees with the single threshold vertex u = (1/2, 1/3).
  CHECK(f.derivative(Rational(0), Side::right) == Rational(1, 2));
}

TEST_CASE("Tn develops a kink against a non-diagonal weight") {
  // weight = log max(|z1|, |z2|^2), psi = log|z2|.
  ToricWeight w({e2(1, 0), e2(0, 2)});
  TianQuery q = query_of(e2(0, 1), w);
  TianFunction f = tian_function(q, Rational(0), Rational(8));
  CHECK(f.is_concave());
  CHECK(f.value_at_0() == lct(w));
  // The threshold polyhedron of w has vertices (1, 1/2) and (0, hmm) --
  // evaluating is enough: exactness against pointwise values.
  for (long k = 0; k <= 16; ++k) {
    Rational t(k, 2);
    CHECK(f.evaluate(t) == tian_value(q, t));
  }
  // Left of a kink the slope is strictly larger (concavity with a real kink).
  if (f.slopes().size() > 1) CHECK(f.slopes()[0] > f.slopes()[1]);
}

TEST_CASE("domain errors name the failing t") {
  // psi = log|z1| with gamma0 = 0: |z1|^{2t} stops being integrable at t = -1.
  TianQuery q = query_of(e2(1, 0), phi22().to_toric());
  CHECK_THROWS_AS((void)tian_function(q, Rational(-2), Rational(1)), Error);
  try {
    (void)tian_function(q, Rational(-2), Rational(1));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("-2") != std::string::npos);
  }
  // The zero twist is rejected up front.
  CHECK_THROWS(TianQuery(Exponent::zero(2), ToricWeight::zero(2), ToricWeight::zero(2),
                         phi22().to_toric()));
}

TEST_CASE("threshold_b0 against closed forms") {
  // u = Phi_(2,2), v = log|z1|, reference 1: b0 = sigma = 1/2.
  ReferencePair ref = ReferencePair::trivial(2);
  ThresholdReport rep = threshold_b0(phi22().to_toric(), ToricWeight::monomial(e2(1, 0)), ref);
  CHECK(rep.b0 == Rational(1, 2));
  CHECK(rep.tn0 == Rational(1));
  CHECK(rep.nonintegrable_at_b0);
  CHECK(rep.integrable_above);
  CHECK(rep.jn_at_b0 == Rational(1));
  CHECK(rep.jn_above > Rational(1));

  // v = u: the threshold slope is 1.
  ThresholdReport self = threshold_b0(phi22().to_toric(), phi22().to_toric(), ref);
  CHECK(self.b0 == Rational(1));

  // u = Phi_(3,3/2), v = log|z2|: b0 = 2/3.
  ToricWeight u33 = DiagonalZhouWeight({Rational(3), Rational(3, 2)}).to_toric();
  ThresholdReport asym = threshold_b0(u33, ToricWeight::monomial(e2(0, 1)), ref);
  CHECK(asym.b0 == Rational(2, 3));
  CHECK(asym.nonintegrable_at_b0);
  CHECK(asym.integrable_above);
}

TEST_CASE("jumping-number Tian bounds from the valuation") {
  // Tn2(t) = sup{c : |G|^{2t} e^{-2c Phi}} for Phi a Zhou weight related to
  // |f0|^2 sits between Tn2(0) + k2 t and k2 t - k1 + 1.
  CounterRng rng(606, 0);
  for (int iter = 0; iter < 40; ++iter) {
    RationalVec k{Rational(1 + static_cast<long>(rng.next_u64() % 6)),
                  Rational(1 + static_cast<long>(rng.next_u64() % 6))};
    Rational tot = k[0] + k[1];
    RationalVec a{tot / k[0], tot / k[1]};
    Exponent f0 = e2(static_cast<long>(rng.next_u64() % 3), static_cast<long>(rng.next_u64() % 3));
    ReferencePair ref(f0, ToricWeight::zero(2));
    DiagonalZhouWeight zhou = zhou_weight_for(ref, a);
    Exponent g = e2(static_cast<long>(rng.next_u64() % 5), static_cast<long>(rng.next_u64() % 5));
    if (g.is_zero()) continue;
    Rational k1 = relative_type(ToricWeight::monomial(f0), zhou);
    Rational k2 = relative_type(ToricWeight::monomial(g), zhou);
    TianQuery q(Exponent::zero(2), ToricWeight::zero(2), ToricWeight::monomial(g),
                zhou.to_toric());
    TianFunction tn2 = tian_function(q, Rational(0), Rational(6));
    for (long tt = 0; tt <= 6; ++tt) {
      Rational t(tt);
      Rational val = tn2.evaluate(t);
      CHECK(val >= tn2.value_at_0() + k2 * t);
      CHECK(val <= k2 * t - k1 + 1);
    }
  }
}

TEST_CASE("strict increase near zero for positive Lelong twists") {
  // Right slope at 0 is positive whenever psi has positive Lelong number and
  // the weight dominates a multiple of log|z|.
  TianQuery q = query_of(e2(1, 1), phi22().to_toric());
  TianFunction f = tian_function(q, Rational(0), Rational(2));
  CHECK(f.derivative(Rational(0), Side::right) > Rational(0));
}

TEST_CASE("sweep agrees with pointwise thresholds on random queries") {
  CounterRng rng(11213, 0);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 3);
    auto rnd_piece = [&](long hi) {
      RationalVec c(static_cast<std::size_t>(n));
      bool nz = false;
      for (auto& x : c) {
        x = Rational(static_cast<long>(rng.next_u64() % (hi + 1)),
                     1 + static_cast<long>(rng.next_u64() % 2));
        nz = nz || !x.is_zero();
      }
      if (!nz) c[static_cast<std::size_t>(rng.next_u64() % n)] = Rational(1);
      return Exponent(std::move(c));
    };
    std::vector<Exponent> wp, pp;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) wp.push_back(rnd_piece(3));
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 2); i < m; ++i) pp.push_back(rnd_piece(2));
    RationalVec g0(static_cast<std::size_t>(n));
    for (auto& x : g0) x = Rational(static_cast<long>(rng.next_u64() % 3));
    TianQuery q(Exponent(g0), ToricWeight::zero(n), ToricWeight(pp, Rational(1, 4)),
                ToricWeight(wp));
    Rational lo = tian_reference_valid_at(q, Rational(-1)) ? Rational(-1) : Rational(0);
    TianFunction f = tian_function(q, lo, Rational(5));
    CHECK(f.is_concave());
    for (long k = 0; k <= 10; ++k) {
      Rational t = lo + (Rational(5) - lo) * Rational(k, 10);
      CHECK(f.evaluate(t) == tian_value(q, t));
    }
  }
}
