#include <doctest.h>

#include "oracles.hpp"
#include "plurival/integrability.hpp"
#include "plurival/rng.hpp"
#include "plurival/tian.hpp"

using namespace plurival;

namespace {

Exponent e2(long a, long b) { return Exponent({Rational(a), Rational(b)}); }

DiagonalZhouWeight phi22() { return DiagonalZhouWeight({Rational(2), Rational(2)}); }

}  // namespace

TEST_CASE("jumping numbers of classical fixtures") {
  // lct of log max(|z1|^2, |z2|^3) = 5/6, with a quadrature cross-check.
  ToricWeight w({e2(2, 0), e2(0, 3)});
  CHECK(lct(w) == Rational(5, 6));
  CHECK(testing::quadrature_integrable(testing::query_margin(e2(0, 0), nullptr, w, 0.78), 2));
  CHECK(!testing::quadrature_integrable(testing::query_margin(e2(0, 0), nullptr, w, 0.90), 2));

  CHECK(jumping_number(JumpingQuery(e2(1, 0), phi22().to_toric())) == Rational(3, 2));
  CHECK(lct(phi22().to_toric()) == Rational(1));
  CHECK(lct(DiagonalZhouWeight({Rational(3), Rational(3, 2)}).to_toric()) == Rational(1));
}

TEST_CASE("integrability is strict at the threshold") {
  JumpingQuery q(e2(1, 0), phi22().to_toric());
  CHECK(jumping_number(q) == Rational(3, 2));
  CHECK(!is_integrable(q, Rational(3, 2)));  // threshold itself fails
  CHECK(is_integrable(q, Rational(3, 2) - Rational(1, 1000)));
  CHECK(!is_integrable(q, Rational(3, 2) + Rational(1, 1000)));

  // |z1|^{-1} is integrable in the plane.
  JumpingQuery q2(e2(0, 0), ToricWeight::monomial(e2(1, 0)));
  CHECK(is_integrable(q2, Rational(1, 2)));

  // Twisted query: threshold 3/4 via the margin LP.
  JumpingQuery q3(e2(0, 0), ToricWeight::monomial(e2(0, 1), Rational(1, 2)), phi22().to_toric());
  CHECK(jumping_number(q3) == Rational(3, 4));
  CHECK(!is_integrable(q3, Rational(1)));
}

TEST_CASE("threshold law on random queries") {
  CounterRng rng(2024, 0);
  Rational eps(1, 1000);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 3);
    RationalVec g(static_cast<std::size_t>(n));
    for (auto& x : g) x = Rational(static_cast<long>(rng.next_u64() % 4));
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) {
      RationalVec c(static_cast<std::size_t>(n));
      bool nonzero = false;
      for (auto& x : c) {
        x = Rational(static_cast<long>(rng.next_u64() % 4), 1 + static_cast<long>(rng.next_u64() % 2));
        nonzero = nonzero || !x.is_zero();
      }
      if (!nonzero) c[0] = Rational(1, 2);
      pieces.push_back(Exponent(std::move(c)));
    }
    JumpingQuery q{Exponent(g), ToricWeight(pieces)};
    Rational c = jumping_number(q);
    CHECK(is_integrable(q, c - eps));
    CHECK(!is_integrable(q, c));
    CHECK(!is_integrable(q, c + eps));
  }
}

TEST_CASE("zhou valuation and the jumping identity") {
  CHECK(zhou_valuation(e2(1, 0), phi22()) == Rational(1, 2));
  CHECK(jumping_number(JumpingQuery(e2(1, 0), phi22().to_toric())) == Rational(3, 2));
  CHECK(zhou_valuation(e2(0, 0), phi22()) == Rational(0));
  CHECK(zhou_valuation(e2(2, 3), DiagonalZhouWeight({Rational(3), Rational(3, 2)})) ==
        Rational(8, 3));
}

TEST_CASE("multiplier membership via the strict criterion") {
  ToricWeight w = phi22().to_toric();
  CHECK(!multiplier_membership(e2(2, 2), w, Rational(3)));  // equality fails
  CHECK(multiplier_membership(e2(3, 2), w, Rational(3)));
  CHECK(multiplier_membership(e2(7, 4), w, Rational(0)));  // I(0) is everything
}

TEST_CASE("multiplier ideals of the diagonal weight") {
  ToricWeight w = phi22().to_toric();
  MonomialIdeal m1 = multiplier_ideal(w, Rational(1));
  CHECK(m1.generators() == std::vector<Exponent>{e2(0, 1), e2(1, 0)});  // maximal ideal

  MonomialIdeal m0 = multiplier_ideal(w, Rational(1, 4));
  CHECK(m0.is_trivial());

  MonomialIdeal m3 = multiplier_ideal(w, Rational(3));
  // All alpha with alpha_1 + alpha_2 >= 5.
  CHECK(m3.generators().size() == 6);
  for (const Exponent& g : m3.generators()) CHECK(g[0] + g[1] == Rational(5));

  // Single-variable pole: z2^k enters I(t log|z2|) iff k > t - 1.
  MonomialIdeal mz = multiplier_ideal(ToricWeight::monomial(e2(0, 1)), Rational(5, 2));
  CHECK(mz.generators() == std::vector<Exponent>{e2(0, 2)});
  MonomialIdeal mz3 = multiplier_ideal(ToricWeight::monomial(e2(0, 1)), Rational(3));
  CHECK(mz3.generators() == std::vector<Exponent>{e2(0, 3)});
}

TEST_CASE("staircase completeness against the membership oracle") {
  CounterRng rng(808, 0);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng.next_u64() % 2);
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 2); i < m; ++i) {
      RationalVec c(static_cast<std::size_t>(n));
      bool nz = false;
      for (auto& x : c) {
        x = Rational(static_cast<long>(rng.next_u64() % 3), 1 + static_cast<long>(rng.next_u64() % 2));
        nz = nz || !x.is_zero();
      }
      if (!nz) c[static_cast<std::size_t>(i % n)] = Rational(1);
      pieces.push_back(Exponent(std::move(c)));
    }
    ToricWeight w(pieces);
    Rational t(1 + static_cast<long>(rng.next_u64() % 5), 1 + static_cast<long>(rng.next_u64() % 2));
    MonomialIdeal ideal = multiplier_ideal(w, t);
    // Spot-check lattice points against the membership criterion.
    for (int probe = 0; probe < 40; ++probe) {
      RationalVec c(static_cast<std::size_t>(n));
      for (auto& x : c) x = Rational(static_cast<long>(rng.next_u64() % 9));
      Exponent alpha(std::move(c));
      CHECK(ideal.contains(alpha) == multiplier_membership(alpha, w, t));
    }
  }
}

TEST_CASE("openness: membership persists for some p > 1") {
  ToricWeight w = phi22().to_toric();
  MonomialIdeal ideal = multiplier_ideal(w, Rational(2));
  for (const Exponent& g : ideal.generators()) {
    Rational p = openness_witness(g, w, Rational(2));
    CHECK(p > Rational(1));
    CHECK(multiplier_membership(g, w, p * 2));
  }
}

TEST_CASE("thmA: equality at the analytic candidate") {
  // I = (z1, z2), phi = Phi_(2,2).
  MonomialIdeal maximal({e2(1, 0), e2(0, 1)});
  ThmAReport rep = thmA_check(maximal, phi22().to_toric(), 50);
  CHECK(rep.diagonal);
  CHECK(rep.lhs == Rational(3, 2));
  CHECK(rep.sigma_at_candidate == Rational(2, 3));
  CHECK(rep.exact_equality);
  CHECK(rep.grid_ok);

  // I = (1): reduces to the log canonical threshold.
  MonomialIdeal unit({e2(0, 0)});
  ThmAReport rep1 = thmA_check(unit, phi22().to_toric(), 50);
  CHECK(rep1.lhs == Rational(1));
  CHECK(rep1.exact_equality);

  // I = (z1^2, z2^3), phi = Phi_(2,2): candidate from the direction formula.
  MonomialIdeal mixed({e2(2, 0), e2(0, 3)});
  ThmAReport rep2 = thmA_check(mixed, phi22().to_toric(), 50);
  CHECK(rep2.exact_equality);
  CHECK(rep2.grid_ok);

  // Non-diagonal weight: grid-only mode with the gap flag.
  ThmAReport rep3 = thmA_check(maximal, ToricWeight::monomial(e2(1, 0)), 50);
  CHECK(!rep3.diagonal);
  CHECK(rep3.gap_flag);
  CHECK(rep3.grid_ok);
  CHECK(rep3.grid_sup < Rational(1) / rep3.lhs);
}

TEST_CASE("inclusion equivalence verdicts") {
  ToricWeight z1 = ToricWeight::monomial(e2(1, 0));
  ToricWeight mx({e2(1, 0), e2(0, 1)});

  InclusionVerdict same = inclusion_equivalence(z1, z1, Rational(6), 4);
  CHECK(same.sigma_u_le_v);
  CHECK(same.sigma_v_le_u);
  CHECK(same.agree);

  // v = max >= u = log|z1|: sigma(v,.) <= sigma(u,.), so I(tu) subset I(tv).
  InclusionVerdict v1 = inclusion_equivalence(z1, mx, Rational(6), 4);
  CHECK(!v1.sigma_u_le_v);
  CHECK(v1.sigma_v_le_u);
  CHECK(v1.agree);
  REQUIRE(v1.witness_uv.has_value());
  // The witness direction makes sigma(u,.) > sigma(v,.) exactly.
  {
    DiagonalZhouWeight wit(*v1.witness_uv);
    CHECK(relative_type(z1, wit) > relative_type(mx, wit));
  }

  // u = log|z1 z2| vs the diagonal germ: incomparable, with witnesses.
  InclusionVerdict v2 = inclusion_equivalence(ToricWeight::monomial(e2(1, 1)),
                                              phi22().to_toric(), Rational(6), 4);
  CHECK(v2.agree);
  CHECK(!v2.sigma_u_le_v);
  CHECK(v2.sigma_v_le_u);
}

TEST_CASE("division two ways") {
  CHECK(divides(e2(2, 1), e2(1, 1)).componentwise);
  CHECK(divides(e2(2, 1), e2(1, 1)).valuative);
  CHECK(divides(e2(1, 1), e2(1, 1)).valuative);

  DivisionVerdict no = divides(e2(2, 0), e2(0, 1));
  CHECK(!no.componentwise);
  CHECK(!no.valuative);
  REQUIRE(no.witness_a.has_value());
  Rational s;
  for (int j = 0; j < 2; ++j)
    s += (e2(2, 0)[j] - e2(0, 1)[j]) / (*no.witness_a)[static_cast<std::size_t>(j)];
  CHECK(s < Rational(0));
}

TEST_CASE("query validation") {
  CHECK_THROWS(JumpingQuery(e2(1, 0), ToricWeight::zero(2)));  // zero weight
  CHECK_THROWS(JumpingQuery(Exponent({Rational(1, 2), Rational(0)}), phi22().to_toric()));
  // Non-integrable twisted reference raises a domain error.
  JumpingQuery bad(e2(0, 0), ToricWeight::monomial(e2(1, 0)), phi22().to_toric());
  CHECK_THROWS_AS((void)jumping_number(bad), Error);
}

TEST_CASE("ideal numerators take the minimum over generators") {
  MonomialIdeal ideal({e2(2, 0), e2(0, 3)});
  Rational c = jumping_number(JumpingQuery(ideal, phi22().to_toric()));
  Rational c1 = jumping_number(JumpingQuery(e2(2, 0), phi22().to_toric()));
  Rational c2 = jumping_number(JumpingQuery(e2(0, 3), phi22().to_toric()));
  CHECK(c == min(c1, c2));
}

TEST_CASE("tian comparisons follow the relative-type order") {
  // When sigma(u,Phi) <= sigma(v,Phi) over the diagonal family, every Tian
  // function with weight v sits below the one with weight u.
  CounterRng rng(1357, 0);
  int ordered_pairs = 0;
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Exponent> up, vp;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 2); i < m; ++i)
      up.push_back(Exponent({Rational(1 + static_cast<long>(rng.next_u64() % 4), 2),
                             Rational(1 + static_cast<long>(rng.next_u64() % 4), 2)}));
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 2); i < m; ++i)
      vp.push_back(Exponent({Rational(1 + static_cast<long>(rng.next_u64() % 4), 2),
                             Rational(1 + static_cast<long>(rng.next_u64() % 4), 2)}));
    ToricWeight u(up), v(vp);
    InclusionVerdict verdict = inclusion_equivalence(u, v, Rational(4), 2);
    if (!verdict.sigma_u_le_v) continue;
    ++ordered_pairs;
    for (long g1 = 0; g1 <= 2; ++g1)
      for (long tt = 1; tt <= 3; ++tt) {
        Exponent f({Rational(g1), Rational(1)});
        // Tn(t; f, w, 0) = threshold of |z^f|^{2t} e^{-2 c w}.
        TianQuery qu(Exponent::zero(2), ToricWeight::zero(2), ToricWeight::monomial(f), u);
        TianQuery qv(Exponent::zero(2), ToricWeight::zero(2), ToricWeight::monomial(f), v);
        CHECK(tian_value(qv, Rational(tt)) <= tian_value(qu, Rational(tt)));
      }
  }
  CHECK(ordered_pairs > 3);
}

TEST_CASE("integral closure membership equals the valuative criterion") {
  // z^f lies in the Newton polyhedron of the generators exactly when its
  // valuation dominates the ideal's over every diagonal direction.
  CounterRng rng(9753, 0);
  for (int iter = 0; iter < 120; ++iter) {
    int n = 1 + static_cast<int>(rng.next_u64() % 3);
    std::vector<Exponent> gens;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) {
      RationalVec c(static_cast<std::size_t>(n));
      for (auto& x : c) x = Rational(static_cast<long>(rng.next_u64() % 5));
      gens.push_back(Exponent(std::move(c)));
    }
    MonomialIdeal ideal(gens);
    RationalVec fc(static_cast<std::size_t>(n));
    for (auto& x : fc) x = Rational(static_cast<long>(rng.next_u64() % 6));
    Exponent f(std::move(fc));
    bool newton = ideal.newton().contains(f);
    // Valuative route: nu(f, Phi) >= nu(I, Phi) over every diagonal direction
    // is the relative-type order sigma(log|I|, .) <= sigma(log|f|, .).
    bool valuative;
    if (f.is_zero()) {
      valuative = ideal.is_trivial();  // nu(1, .) = 0 dominates only nu(1, .)
    } else {
      ToricWeight wf = ToricWeight::monomial(f);
      ToricWeight wi(ideal.generators());
      InclusionVerdict verdict = inclusion_equivalence(wi, wf, Rational(2), 1);
      valuative = verdict.sigma_u_le_v;
    }
    CHECK(newton == valuative);
  }
}

TEST_CASE("multiplier ideal equals the brute-force box staircase") {
  CounterRng rng(31415, 0);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Exponent> pieces;
    for (long i = 0, m = 1 + static_cast<long>(rng.next_u64() % 3); i < m; ++i) {
      RationalVec c{Rational(static_cast<long>(rng.next_u64() % 3), 1 + static_cast<long>(rng.next_u64() % 2)),
                    Rational(static_cast<long>(rng.next_u64() % 3), 1 + static_cast<long>(rng.next_u64() % 2))};
      if (c[0].is_zero() && c[1].is_zero()) c[0] = Rational(1);
      pieces.push_back(Exponent(std::move(c)));
    }
    ToricWeight w(pieces);
    Rational t(1 + static_cast<long>(rng.next_u64() % 6), 1 + static_cast<long>(rng.next_u64() % 2));
    MonomialIdeal fast = multiplier_ideal(w, t);
    // Brute force: scan a box comfortably beyond every generator and keep the
    // minimal members.
    long cap = 0;
    for (const Exponent& g : fast.generators())
      for (int j = 0; j < 2; ++j)
        cap = std::max(cap, static_cast<long>(g[j].numerator().convert_to<long long>()));
    cap += 3;
    std::vector<Exponent> brute;
    for (long x = 0; x <= cap; ++x)
      for (long y = 0; y <= cap; ++y) {
        Exponent a({Rational(x), Rational(y)});
        if (!multiplier_membership(a, w, t)) continue;
        bool minimal = (x == 0 || !multiplier_membership(Exponent({Rational(x - 1), Rational(y)}), w, t)) &&
                       (y == 0 || !multiplier_membership(Exponent({Rational(x), Rational(y - 1)}), w, t));
        if (minimal) brute.push_back(a);
      }
    CHECK(fast == MonomialIdeal(brute));
  }
}
