#include <doctest.h>

#include "oracles.hpp"
#include "plurival/integrability.hpp"
#include "plurival/rng.hpp"
#include "plurival/toric_weight.hpp"

using namespace plurival;

namespace {

Exponent e2(long a, long b) { return Exponent({Rational(a), Rational(b)}); }
Exponent e2q(Rational a, Rational b) { return Exponent({std::move(a), std::move(b)}); }

DiagonalZhouWeight phi22() { return DiagonalZhouWeight({Rational(2), Rational(2)}); }

}  // namespace

TEST_CASE("weight construction reduces pieces and validates") {
  ToricWeight w({e2(3, 0), e2(0, 3), e2(1, 1)});
  CHECK(w.pieces().size() == 3);  // (1,1) is a vertex here
  ToricWeight w2({e2(2, 0), e2(0, 3), e2(1, 2)});
  CHECK(w2.pieces().size() == 2);  // (1,2) inside
  CHECK_THROWS(ToricWeight({}, Rational(1)));
  CHECK_THROWS(ToricWeight({e2(1, 0)}, Rational(0)));
  CHECK_THROWS(ToricWeight({e2(1, 0)}, Rational(-1)));
}

TEST_CASE("weight_sum follows the tropical product rule") {
  // log|z1| + log|z2| = log|z1 z2|.
  ToricWeight a = ToricWeight::monomial(e2(1, 0));
  ToricWeight b = ToricWeight::monomial(e2(0, 1));
  CHECK(weight_sum(a, b).pieces() == std::vector<Exponent>{e2(1, 1)});

  // log max(|z1|^2,|z2|^2) + log|z1| -> {(3,0),(1,2)}.
  ToricWeight m({e2(2, 0), e2(0, 2)});
  ToricWeight s = weight_sum(m, a);
  CHECK(s.pieces() == std::vector<Exponent>{e2(1, 2), e2(3, 0)});

  // Zero weight is the identity.
  CHECK(weight_sum(m, ToricWeight::zero(2)).germ_eq(m));
  CHECK_THROWS(weight_sum(a, ToricWeight::monomial(Exponent({Rational(1)}))));
}

TEST_CASE("weight_max follows the tropical sum rule") {
  ToricWeight z1 = ToricWeight::monomial(e2(1, 0));
  ToricWeight z2 = ToricWeight::monomial(e2(0, 1));
  CHECK(weight_max(z1, z2).pieces() == std::vector<Exponent>{e2(0, 1), e2(1, 0)});

  // max{log|z1^2|, log|z1|}: the larger germ absorbs.
  CHECK(weight_max(ToricWeight::monomial(e2(2, 0)), z1).pieces() == std::vector<Exponent>{e2(1, 0)});

  // max{Phi_(2,2), log|z1|} -> {(1,0),(0,2)}.
  ToricWeight mx = weight_max(phi22().to_toric(), z1);
  CHECK(mx.pieces() == std::vector<Exponent>{e2(0, 2), e2(1, 0)});
}

TEST_CASE("relative type closed form") {
  // sigma(log|z1 z2|, Phi_(2,2)) = 1, cross-checked on a log grid.
  ToricWeight psi = ToricWeight::monomial(e2(1, 1));
  Rational sigma = relative_type(psi, phi22());
  CHECK(sigma == Rational(1));
  ToricWeight phi_t = phi22().to_toric();
  for (long u1 = 1; u1 <= 100; u1 += 9) {
    for (long u2 = 1; u2 <= 100; u2 += 9) {
      RationalVec u{Rational(u1), Rational(u2)};
      CHECK(psi.value_log(u) <= sigma * phi_t.value_log(u));
    }
  }
  // sigma + 1/100 fails the inequality somewhere on the same grid.
  bool violated = false;
  Rational above = sigma + Rational(1, 100);
  for (long k = 1; k <= 100 && !violated; ++k) {
    RationalVec u{Rational(k), Rational(k)};
    violated = psi.value_log(u) > above * phi_t.value_log(u);
  }
  CHECK(violated);

  CHECK(relative_type(phi22().to_toric(), phi22()) == Rational(1));  // self type
  CHECK(relative_type(ToricWeight({e2(1, 0), e2(0, 3)}), phi22()) == Rational(1, 2));
  // LP route agrees with the closed form.
  CHECK(relative_type_toric(ToricWeight({e2(1, 0), e2(0, 3)}), phi22().to_toric()) ==
        Rational(1, 2));
}

TEST_CASE("lelong and kiselman numbers") {
  ToricWeight w = ToricWeight::monomial(e2(2, 1));
  CHECK(lelong_number(w) == Rational(3));
  CHECK(kiselman_number(w, {Rational(1), Rational(1)}) == Rational(3));

  ToricWeight mx({e2(1, 0), e2(0, 1)});
  CHECK(kiselman_number(mx, {Rational(1), Rational(3)}) == Rational(1));
  CHECK(kiselman_number(ToricWeight::monomial(e2(0, 1)), {Rational(1), Rational(3)}) == Rational(3));
  CHECK_THROWS(kiselman_number(mx, {Rational(1), Rational(0)}));
}

TEST_CASE("diagonal weights validate the direction constraint") {
  CHECK_NOTHROW(DiagonalZhouWeight({Rational(2), Rational(2)}));
  CHECK_NOTHROW(DiagonalZhouWeight({Rational(3), Rational(3, 2)}));
  CHECK_THROWS(DiagonalZhouWeight({Rational(3), Rational(3)}));
  CHECK_THROWS(DiagonalZhouWeight({Rational(2), Rational(-2)}));
  // Normalization helper reaches the constraint exactly.
  RationalVec a = DiagonalZhouWeight::normalize_direction({Rational(1), Rational(1)});
  CHECK_NOTHROW((void)DiagonalZhouWeight{a});
  CHECK(a == RationalVec{Rational(2), Rational(2)});
}

TEST_CASE("zhou_weight_for returns the exact threshold scaling") {
  // Reference 1: Phi_(2,2) itself.
  DiagonalZhouWeight w1 = zhou_weight_for(ReferencePair::trivial(2), {Rational(2), Rational(2)});
  CHECK(w1.scale() == Rational(1));

  // Reference z1: threshold 3/2.
  ReferencePair ref_z1(e2(1, 0), ToricWeight::zero(2));
  DiagonalZhouWeight w2 = zhou_weight_for(ref_z1, {Rational(2), Rational(2)});
  CHECK(w2.scale() == Rational(3, 2));
  // Consistency with the transported-weight rule (1 + alpha*sigma) * Phi for
  // Phi the reference-1 weight.
  Rational alpha(1);
  Rational sigma = relative_type(ToricWeight::monomial(e2(1, 0)), w1);
  CHECK(w2.scale() == Rational(1) + alpha * sigma);

  // Twisted reference phi0 = (1/2) log|z1|: threshold 3/4.
  ReferencePair ref_tw(e2(0, 0), ToricWeight::monomial(e2(1, 0), Rational(1, 2)));
  DiagonalZhouWeight w3 = zhou_weight_for(ref_tw, {Rational(2), Rational(2)});
  CHECK(w3.scale() == Rational(3, 4));
  // Quadrature oracle: at the returned scale the reference is right at the
  // border; slightly below it is integrable, slightly above it is not.
  {
    ToricWeight phi_t = phi22().to_toric();
    auto below = testing::query_margin(e2(0, 0), &ref_tw.phi0(), phi_t, 0.70);
    auto above = testing::query_margin(e2(0, 0), &ref_tw.phi0(), phi_t, 0.80);
    CHECK(testing::quadrature_integrable(below, 2));
    CHECK(!testing::quadrature_integrable(above, 2));
  }
  // Definitional check: the scaled weight keeps the reference non-integrable
  // while any smaller scale restores integrability.
  {
    JumpingQuery q(ref_tw.f0(), ref_tw.phi0(), w3.to_toric());
    CHECK(!is_integrable(q, Rational(1)));
    JumpingQuery q_below(ref_tw.f0(), ref_tw.phi0(), w3.to_toric().rescaled(Rational(99, 100)));
    CHECK(is_integrable(q_below, Rational(1)));
  }
}

TEST_CASE("zhou weight maximality within perturbed toric competitors") {
  // Any toric w >= s*Phi_a keeping the reference non-integrable is germ-equal.
  ReferencePair ref(e2(1, 0), ToricWeight::zero(2));
  DiagonalZhouWeight zw = zhou_weight_for(ref, {Rational(2), Rational(2)});
  ToricWeight base = zw.to_toric();
  CounterRng rng(99, 0);
  int competitors = 0;
  for (int iter = 0; iter < 200; ++iter) {
    // Perturb the piece set: scale pieces down slightly or add extra pieces.
    std::vector<Exponent> pieces = base.scaled_pieces();
    long mode = static_cast<long>(rng.next_u64() % 3);
    if (mode == 0) {
      Rational f(static_cast<long>(90 + rng.next_u64() % 20), 100);
      for (auto& p : pieces) p = p.scaled(f);
    } else if (mode == 1) {
      pieces.push_back(e2q(Rational(static_cast<long>(rng.next_u64() % 4)),
                           Rational(static_cast<long>(rng.next_u64() % 4))));
    } else {
      pieces[rng.next_u64() % pieces.size()] =
          e2q(Rational(static_cast<long>(rng.next_u64() % 5), 2),
              Rational(static_cast<long>(rng.next_u64() % 5), 2));
    }
    bool nonzero = true;
    for (const auto& p : pieces)
      if (p.is_zero()) nonzero = false;
    if (!nonzero) continue;
    ToricWeight w(pieces);
    if (!base.germ_leq(w)) continue;  // not a competitor
    JumpingQuery q(ref.f0(), w);
    if (is_integrable(q, Rational(1))) continue;  // integrability lost
    ++competitors;
    CHECK(w.germ_eq(base));
  }
  CHECK(competitors > 0);
}

TEST_CASE("compare_zhou orders by monomial types") {
  DiagonalZhouWeight a = phi22();
  DiagonalZhouWeight b({Rational(3), Rational(3, 2)});
  CHECK(compare_zhou(a, a) == GermOrder::equal);
  CHECK(compare_zhou(a, b) == GermOrder::incomparable);
  // Normalized family: comparable implies equal.
  CounterRng rng(31, 0);
  for (int iter = 0; iter < 100; ++iter) {
    RationalVec k1{Rational(1 + static_cast<long>(rng.next_u64() % 9)),
                   Rational(1 + static_cast<long>(rng.next_u64() % 9))};
    Rational t1 = k1[0] + k1[1];
    DiagonalZhouWeight w1({t1 / k1[0], t1 / k1[1]});
    RationalVec k2{Rational(1 + static_cast<long>(rng.next_u64() % 9)),
                   Rational(1 + static_cast<long>(rng.next_u64() % 9))};
    Rational t2 = k2[0] + k2[1];
    DiagonalZhouWeight w2({t2 / k2[0], t2 / k2[1]});
    GermOrder ord = compare_zhou(w1, w2);
    if (ord != GermOrder::incomparable)
      CHECK((ord == GermOrder::equal) == (w1.a() == w2.a()));
    if (ord == GermOrder::less || ord == GermOrder::greater) CHECK(false);
  }
}

TEST_CASE("sharp bound holds pointwise for canonical representatives") {
  CounterRng rng(55, 0);
  for (int iter = 0; iter < 50; ++iter) {
    RationalVec k{Rational(1 + static_cast<long>(rng.next_u64() % 5)),
                  Rational(1 + static_cast<long>(rng.next_u64() % 5))};
    Rational tot = k[0] + k[1];
    DiagonalZhouWeight phi({tot / k[0], tot / k[1]});
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i)
      pieces.push_back(e2q(Rational(static_cast<long>(rng.next_u64() % 4), 2),
                           Rational(1 + static_cast<long>(rng.next_u64() % 6), 2)));
    ToricWeight psi(pieces);
    Rational sigma = relative_type(psi, phi);
    ToricWeight phi_t = phi.to_toric();
    for (long u1 = 0; u1 <= 12; u1 += 3)
      for (long u2 = 0; u2 <= 12; u2 += 3) {
        RationalVec u{Rational(u1, 2), Rational(u2, 2)};
        CHECK(psi.value_log(u) <= sigma * phi_t.value_log(u));
      }
  }
}

TEST_CASE("germ comparison via newton polyhedra") {
  ToricWeight deep = ToricWeight::monomial(e2(2, 2));
  ToricWeight shallow = ToricWeight::monomial(e2(1, 1));
  CHECK(deep.germ_leq(shallow));
  CHECK(!shallow.germ_leq(deep));
  CHECK(deep.germ_eq(ToricWeight::monomial(e2(1, 1), Rational(2))));
  // log max and log sum agree as germs: same piece set, any representation.
  ToricWeight a({e2(1, 0), e2(0, 1), e2(1, 1)});
  ToricWeight b({e2(1, 0), e2(0, 1)});
  CHECK(a.germ_eq(b));
}

TEST_CASE("reference pairs require integrability") {
  CHECK_NOTHROW(ReferencePair(e2(0, 0), ToricWeight::monomial(e2(1, 0), Rational(1, 2))));
  // e^{-2 log|z1|} = |z1|^{-2} is not integrable.
  CHECK_THROWS(ReferencePair(e2(0, 0), ToricWeight::monomial(e2(1, 0), Rational(1))));
  CHECK_NOTHROW(ReferencePair(e2(1, 0), ToricWeight::monomial(e2(1, 0), Rational(1))));
}

TEST_CASE("closed-form and LP relative types agree on random fixtures") {
  CounterRng rng(6464, 0);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 3);
    RationalVec k(static_cast<std::size_t>(n));
    Rational tot;
    for (auto& x : k) {
      x = Rational(1 + static_cast<long>(rng.next_u64() % 7));
      tot += x;
    }
    RationalVec a(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = tot / k[j];
    DiagonalZhouWeight phi(a);
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) {
      RationalVec c(static_cast<std::size_t>(n));
      bool nz = false;
      for (auto& x : c) {
        x = Rational(static_cast<long>(rng.next_u64() % 4), 1 + static_cast<long>(rng.next_u64() % 3));
        nz = nz || !x.is_zero();
      }
      if (!nz) c[0] = Rational(1, 2);
      pieces.push_back(Exponent(std::move(c)));
    }
    ToricWeight psi(pieces, Rational(1 + static_cast<long>(rng.next_u64() % 4), 2));
    CHECK(relative_type(psi, phi) == relative_type_toric(psi, phi.to_toric()));
  }
}

TEST_CASE("lelong is the kiselman number in the unit direction") {
  CounterRng rng(8181, 0);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 4);
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) {
      RationalVec c(static_cast<std::size_t>(n));
      bool nz = false;
      for (auto& x : c) {
        x = Rational(static_cast<long>(rng.next_u64() % 5), 1 + static_cast<long>(rng.next_u64() % 2));
        nz = nz || !x.is_zero();
      }
      if (!nz) c[0] = Rational(1);
      pieces.push_back(Exponent(std::move(c)));
    }
    ToricWeight psi(pieces, Rational(1 + static_cast<long>(rng.next_u64() % 3)));
    CHECK(lelong_number(psi) == kiselman_number(psi, RationalVec(static_cast<std::size_t>(n), Rational(1))));
  }
}
