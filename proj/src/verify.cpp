#include "plurival/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <sstream>

#include "plurival/approximation.hpp"
#include "plurival/errors.hpp"
#include "plurival/integral_oracle.hpp"
#include "plurival/integrability.hpp"
#include "plurival/rng.hpp"
#include "plurival/tian.hpp"

namespace plurival {

namespace {

// Deterministic fixture generation on top of the counter RNG.
class Fixtures {
 public:
  explicit Fixtures(std::uint64_t seed) : rng_(seed, 0) {}

  long uniform(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(rng_.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long num_max, long den_max) {
    return Rational(uniform(0, num_max), uniform(1, den_max));
  }
  Rational positive_rational(long num_max, long den_max) {
    return Rational(uniform(1, num_max), uniform(1, den_max));
  }

  Exponent integer_exponent(int n, long coord_max) {
    RationalVec c(static_cast<std::size_t>(n));
    for (auto& x : c) x = Rational(uniform(0, coord_max));
    return Exponent(std::move(c));
  }

  Exponent rational_exponent(int n, long num_max, long den_max) {
    RationalVec c(static_cast<std::size_t>(n));
    for (auto& x : c) x = rational(num_max, den_max);
    return Exponent(std::move(c));
  }

  // Nonzero piece: at least one positive coordinate.
  Exponent nonzero_piece(int n, long num_max, long den_max) {
    for (;;) {
      Exponent e = rational_exponent(n, num_max, den_max);
      if (!e.is_zero()) return e;
    }
  }

  ToricWeight toric_weight(int n, int max_pieces = 3, long num_max = 3, long den_max = 3) {
    int k = static_cast<int>(uniform(1, max_pieces));
    std::vector<Exponent> pieces;
    for (int i = 0; i < k; ++i) pieces.push_back(nonzero_piece(n, num_max, den_max));
    return ToricWeight(std::move(pieces), positive_rational(3, 3));
  }

  // Diagonal direction with exact sum 1/a_j = 1.
  RationalVec direction(int n) {
    RationalVec k(static_cast<std::size_t>(n));
    Rational total;
    for (auto& x : k) {
      x = Rational(uniform(1, 9));
      total += x;
    }
    RationalVec a(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = total / k[j];
    return a;
  }

  MonomialIdeal ideal(int n, int max_gens = 4, long coord_max = 5) {
    int k = static_cast<int>(uniform(1, max_gens));
    std::vector<Exponent> gens;
    for (int i = 0; i < k; ++i) gens.push_back(integer_exponent(n, coord_max));
    return MonomialIdeal(std::move(gens));
  }

  // Reference pair with a small twist so that integrability is guaranteed.
  ReferencePair reference(int n, bool with_twist) {
    Exponent f0 = integer_exponent(n, 2);
    if (!with_twist) return ReferencePair(std::move(f0), ToricWeight::zero(n));
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Exponent> pieces;
      int k = static_cast<int>(uniform(1, 2));
      for (int i = 0; i < k; ++i) pieces.push_back(nonzero_piece(n, 2, 2));
      ToricWeight phi0(std::move(pieces), Rational(1, 4));
      if (reference_margin_min(f0, phi0).sign() > 0) return ReferencePair(f0, phi0);
    }
    return ReferencePair(std::move(f0), ToricWeight::zero(n));
  }

 private:
  CounterRng rng_;
};

struct Checker {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = describe();
    }
  }
  void expect(bool ok, const std::string& what) {
    expect(ok, [&] { return what; });
  }
};

using SuiteFn = void (*)(std::uint64_t, int, Checker&);

// ---------------------------------------------------------------------------
// 1. Valuation axioms on monomials.
void suite_valuation(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 1000; ++i) {
    int n = static_cast<int>(fx.uniform(1, 4));
    DiagonalZhouWeight phi(fx.direction(n));
    Exponent f = fx.integer_exponent(n, 6);
    Exponent g = fx.integer_exponent(n, 6);
    Rational vf = zhou_valuation(f, phi);
    Rational vg = zhou_valuation(g, phi);
    Rational vfg = zhou_valuation(f + g, phi);
    ck.expect(vfg == vf + vg, "valuation additivity on products");
    ck.expect(zhou_valuation(Exponent::zero(n), phi) == Rational(0), "valuation of a unit");
  }
}

// ---------------------------------------------------------------------------
// 2. Tropical multiplicativity and additivity of relative types.
void suite_tropical(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 1000; ++i) {
    int n = static_cast<int>(fx.uniform(1, 3));
    DiagonalZhouWeight phi(fx.direction(n));
    ToricWeight psi1 = fx.toric_weight(n);
    ToricWeight psi2 = fx.toric_weight(n);
    Rational c1 = fx.rational(3, 2);
    Rational c2 = fx.rational(3, 2);
    ToricWeight s1 = c1.is_zero() ? ToricWeight::zero(n) : psi1.rescaled(c1);
    ToricWeight s2 = c2.is_zero() ? ToricWeight::zero(n) : psi2.rescaled(c2);
    ToricWeight combo = weight_sum(s1, s2);
    Rational lhs = relative_type(combo, phi);
    Rational rhs = c1 * relative_type(psi1, phi) + c2 * relative_type(psi2, phi);
    ck.expect(lhs == rhs, "tropical multiplicativity of relative types");

    Rational lhs2 = relative_type(weight_max(psi1, psi2), phi);
    Rational rhs2 = min(relative_type(psi1, phi), relative_type(psi2, phi));
    ck.expect(lhs2 == rhs2, "tropical additivity of relative types");
  }
}

// ---------------------------------------------------------------------------
// 3. Jumping-number identity and the general-reference sandwich.
void suite_jumping(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 1000; ++i) {
    int n = static_cast<int>(fx.uniform(1, 4));
    DiagonalZhouWeight phi(fx.direction(n));
    Exponent g = fx.integer_exponent(n, 6);
    Rational nu = zhou_valuation(g, phi);
    Rational jn = jumping_number(JumpingQuery(g, phi.to_toric()));
    ck.expect(nu + 1 == jn, "nu(G,Phi) + 1 = c_o^G(Phi) with reference 1");
  }
  for (int i = 0; i < 500; ++i) {
    int n = static_cast<int>(fx.uniform(1, 3));
    ReferencePair ref = fx.reference(n, i % 2 == 1);
    DiagonalZhouWeight zhou = zhou_weight_for(ref, fx.direction(n));
    ToricWeight zt = zhou.to_toric();
    Exponent g = fx.integer_exponent(n, 5);
    Rational nu = zhou_valuation(g, zhou);
    Rational c0 = jumping_number(JumpingQuery(Exponent::zero(n), zt));
    Rational cg = jumping_number(JumpingQuery(g, zt));
    Rational k1 = relative_type(ToricWeight::monomial(ref.f0()), zhou);
    Rational kphi = ref.phi0().is_zero_weight() ? Rational(0) : relative_type(ref.phi0(), zhou);
    ck.expect(nu + c0 <= cg, "lower jumping bound nu + c_o <= c_o^G");
    ck.expect(cg <= nu - k1 + 1 + kphi, "upper jumping bound c_o^G <= nu - k1 + 1 + k_phi0");
  }
}

// ---------------------------------------------------------------------------
// 4. Tian linearity against Zhou weights and concavity.
void suite_tian(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 200; ++i) {
    int n = static_cast<int>(fx.uniform(1, 3));
    ReferencePair ref = fx.reference(n, i % 3 == 1);
    DiagonalZhouWeight zhou = zhou_weight_for(ref, fx.direction(n));
    // Small psi keeps the twisted reference integrable down to t = -1.
    std::vector<Exponent> psi_pieces;
    for (long k = fx.uniform(1, 2); k > 0; --k) psi_pieces.push_back(fx.nonzero_piece(n, 2, 2));
    ToricWeight psi(std::move(psi_pieces), Rational(1, 8));
    TianQuery q(ref.f0(), ref.phi0(), psi, zhou.to_toric());

    TianFunction pos = tian_function(q, Rational(0), Rational(4));
    Rational sigma = relative_type(psi, zhou);
    ck.expect(pos.slopes().size() == 1, "Tn linear on [0,4] against a Zhou weight");
    ck.expect(pos.value_at_0() == Rational(1), "Tn(0) = 1 against its own Zhou weight");
    ck.expect(pos.slopes()[0] == sigma, "Tn slope equals the relative type");
    ck.expect(pos.evaluate(Rational(4)) == Rational(1) + sigma * 4, "Tn(4) = Tn(0) + 4 sigma");

    TianFunction full = tian_function(q, Rational(-1), Rational(4));
    ck.expect(full.is_concave(), "Tn concave on [-1,4]");
    ck.expect(derivative_at_zero(full, Side::right) == sigma, "right derivative at 0");
    ck.expect(derivative_at_zero(full, Side::left) == sigma,
              "differentiable at 0 against a Zhou weight");
  }
}

// ---------------------------------------------------------------------------
// 5. Threshold b0 of the max-combination.
void suite_threshold(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 100; ++i) {
    int n = static_cast<int>(fx.uniform(1, 3));
    ReferencePair ref = fx.reference(n, i % 4 == 1);
    // The pair lemma needs the weight to dominate a multiple of log|z|; give
    // every axis a pure-power piece so Tn is strictly increasing near 0.
    std::vector<Exponent> axis_pieces;
    for (int j = 0; j < n; ++j)
      axis_pieces.push_back(Exponent::unit(n, j).scaled(fx.positive_rational(4, 1) + 1));
    ToricWeight u = weight_max(fx.toric_weight(n), ToricWeight(std::move(axis_pieces)));
    ToricWeight v = fx.toric_weight(n);
    ThresholdReport rep = threshold_b0(u, v, ref);
    ck.expect(rep.nonintegrable_at_b0, "jumping number unchanged at b0");
    ck.expect(rep.integrable_above, "jumping number strictly larger at b0 + 1/1000");
    ck.expect(rep.b0 == rep.left_derivative, "b0 is the left derivative");
    // Invariance extends to every b <= b0.
    auto jn_for = [&](const Rational& b) {
      ToricWeight mixed = weight_max(u, v.rescaled(Rational(1) / b));
      JumpingQuery jq = ref.phi0().is_zero_weight() ? JumpingQuery(ref.f0(), mixed)
                                                    : JumpingQuery(ref.f0(), ref.phi0(), mixed);
      return jumping_number(jq);
    };
    ck.expect(jn_for(rep.b0 / 2) == rep.tn0, "jumping number unchanged at b0/2");
    ck.expect(jn_for(rep.b0 * Rational(3, 4)) == rep.tn0, "jumping number unchanged at 3b0/4");
  }
}

// ---------------------------------------------------------------------------
// 6. Integral formula for Zhou numbers.
void suite_integral(std::uint64_t seed, int workers, Checker& ck) {
  Fixtures fx(seed);
  std::vector<Rational> grid{Rational(2), Rational(4), Rational(8), Rational(16), Rational(32)};
  for (int i = 0; i < 25; ++i) {
    int n = static_cast<int>(fx.uniform(1, 3));
    Exponent f0 = fx.integer_exponent(n, 2);
    ToricWeight phi0 = ToricWeight::monomial(fx.nonzero_piece(n, 1, 2), Rational(1, 4));
    if (reference_margin_min(f0, phi0).sign() <= 0) continue;
    ReferencePair ref(f0, phi0);
    DiagonalZhouWeight phi(fx.direction(n));
    ToricWeight psi = ToricWeight::monomial(fx.nonzero_piece(n, 3, 2), fx.positive_rational(2, 2));
    RatioSeries series = ratio_convergence(ref, phi, psi, grid);
    ck.expect(series.exact, "closed form produces the exact ratio model");
    ck.expect(series.exact_limit == series.sigma, "ratio limit equals the relative type");
    ck.expect(series.residual == 0, "exact 1/t model has zero residual");
  }
  // Monte Carlo against the closed form at t = 8, N = 10^6.
  for (int i = 0; i < 3; ++i) {
    int n = 2;
    ReferencePair ref(fx.integer_exponent(n, 1), ToricWeight::zero(n));
    DiagonalZhouWeight phi(fx.direction(n));
    ToricWeight psi = ToricWeight::monomial(fx.nonzero_piece(n, 2, 2));
    Rational t(8);
    SublevelIntegral cf = sublevel_closed_form(ref, phi, psi, t);
    SublevelIntegral mc = sublevel_monte_carlo(ref, phi, psi, t, 1000000, seed + static_cast<std::uint64_t>(i), workers);
    ck.expect(std::abs(mc.mass - cf.mass) <= 3 * mc.stderr_mass + 1e-12 * cf.mass,
              "Monte Carlo mass within 3 stderr of closed form");
    ck.expect(std::abs(mc.moment - cf.moment) <= 3 * mc.stderr_moment + 1e-12 * cf.moment,
              "Monte Carlo moment within 3 stderr of closed form");
    ck.expect(std::abs(mc.ratio - cf.ratio) <= 3 * mc.stderr_ratio + 1e-12 * cf.ratio,
              "Monte Carlo ratio within 3 stderr of closed form");
  }
  // Multi-piece psi: Monte Carlo ratio approaches the tropical type.
  {
    int n = 2;
    ReferencePair ref = ReferencePair::trivial(n);
    RationalVec a{Rational(2), Rational(2)};
    DiagonalZhouWeight phi(a);
    ToricWeight psi({Exponent::unit(n, 0), Exponent::unit(n, 1)});
    Rational t(8);
    SublevelIntegral mc = sublevel_monte_carlo(ref, phi, psi, t, 1000000, seed, workers);
    double sigma = relative_type(psi, phi).to_double();
    double band = 3 * mc.stderr_ratio + 1.0 / (2 * t.to_double());
    ck.expect(std::abs(mc.ratio - sigma) <= band,
              "multi-piece Monte Carlo ratio within the 1/t band of sigma");
  }
}

// ---------------------------------------------------------------------------
// 7. Mass asymptotics at threshold normalization.
void suite_mass(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  std::vector<Rational> grid{Rational(1), Rational(2), Rational(4), Rational(8), Rational(16),
                             Rational(32)};
  for (int i = 0; i < 20; ++i) {
    int n = static_cast<int>(fx.uniform(1, 3));
    Exponent f0 = fx.integer_exponent(n, 2);
    ToricWeight phi0 = ToricWeight::monomial(fx.nonzero_piece(n, 1, 2), Rational(1, 4));
    if (reference_margin_min(f0, phi0).sign() <= 0) continue;
    ReferencePair ref(f0, phi0);
    RationalVec a = fx.direction(n);
    // Scale the weight to the exact threshold.
    DiagonalZhouWeight zhou = zhou_weight_for(ref, a);
    MassAsymptoticsReport rep = mass_asymptotics(ref, zhou, grid);
    ck.expect(rep.threshold_normalized, "threshold normalization gives rate exactly 1");
    ck.expect(rep.classification == "threshold", "threshold classification");
    // e^{2t} * mass is the exact constant K on the whole grid.
    for (double v : rep.e2t_mass)
      ck.expect(std::abs(v - rep.constant.to_double()) <= 1e-12 * std::abs(rep.constant.to_double()),
                "e^{2t} mass constant at threshold");
  }
  {
    // K = 1 fixture: -log(mass)/(2t) equals 1 to full precision at t = 32.
    int n = 2;
    Exponent f0 = Exponent::zero(n);
    ToricWeight phi0 =
        ToricWeight::monomial(Exponent(RationalVec{Rational(1), Rational(1)}), Rational(1, 2));
    ReferencePair ref(f0, phi0);
    RationalVec a{Rational(2), Rational(2)};
    DiagonalZhouWeight zhou = zhou_weight_for(ref, a);
    MassAsymptoticsReport rep = mass_asymptotics(ref, zhou, grid);
    ck.expect(rep.constant == Rational(1), "unit constant fixture");
    ck.expect(std::abs(rep.neg_log_mass_over_2t.back() - 1.0) <= 1e-6,
              "-log(mass)/(2t) within 1e-6 of 1 at t = 32");
  }
  {
    // Off-threshold scalings classify by the margin direction.
    int n = 2;
    ReferencePair ref = ReferencePair::trivial(n);
    RationalVec a{Rational(2), Rational(2)};
    DiagonalZhouWeight sub(a, Rational(9, 10));
    DiagonalZhouWeight super(a, Rational(11, 10));
    ck.expect(mass_asymptotics(ref, sub, grid).classification == "integrable_margin",
              "sub-threshold scaling decays");
    ck.expect(mass_asymptotics(ref, super, grid).classification == "nonintegrable_margin",
              "super-threshold scaling grows");
  }
}

// ---------------------------------------------------------------------------
// 8. Jumping number vs supremum of Zhou numbers.
void suite_thmA(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  int done = 0;
  while (done < 20) {
    int n = static_cast<int>(fx.uniform(2, 3));
    MonomialIdeal ideal = fx.ideal(n, 4, 4);
    // Diagonal weight log max |z_j|^{b_j} with random positive b.
    std::vector<Exponent> pieces;
    for (int j = 0; j < n; ++j)
      pieces.push_back(Exponent::unit(n, j).scaled(fx.positive_rational(4, 2)));
    ToricWeight phi(std::move(pieces));
    ThmAReport rep = thmA_check(ideal, phi, 100);
    ck.expect(rep.diagonal, "diagonal weight recognized");
    ck.expect(rep.exact_equality, "c_o^I(phi) * sigma at the candidate equals 1 exactly");
    ck.expect(rep.grid_ok, "no grid direction exceeds the certified supremum");
    ++done;
  }
}

// ---------------------------------------------------------------------------
// 9. Multiplier-ideal inclusions vs relative-type order.
void suite_inclusion(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 200; ++i) {
    int n = 2;
    ToricWeight u = fx.toric_weight(n, 3, 3, 2);
    ToricWeight v = fx.toric_weight(n, 3, 3, 2);
    InclusionVerdict verdict = inclusion_equivalence(u, v, Rational(20), 10);
    ck.expect(verdict.agree, "relative-type order matches ideal inclusions on the grid");
    // Third route: the order is exactly germ domination.
    ck.expect(verdict.sigma_u_le_v == v.germ_leq(u), "sigma order matches germ order (u side)");
    ck.expect(verdict.sigma_v_le_u == u.germ_leq(v), "sigma order matches germ order (v side)");
  }
}

// ---------------------------------------------------------------------------
// 10. Division relations.
void suite_division(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int i = 0; i < 1000; ++i) {
    int n = static_cast<int>(fx.uniform(1, 4));
    Exponent f = fx.integer_exponent(n, 6);
    Exponent g = fx.integer_exponent(n, 6);
    DivisionVerdict d = divides(f, g);
    ck.expect(d.componentwise == d.valuative, "componentwise and valuative division agree");
    if (!d.valuative && n >= 2) {
      ck.expect(d.witness_a.has_value(), "failing division carries a witness direction");
      if (d.witness_a) {
        Rational s;
        for (int j = 0; j < n; ++j) s += (f[j] - g[j]) / (*d.witness_a)[static_cast<std::size_t>(j)];
        ck.expect(s.sign() < 0, "witness direction violates the valuation order");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 11. Approximation by multiplier-ideal monomial families.
void suite_approximation(std::uint64_t seed, int, Checker& ck) {
  Fixtures fx(seed);
  for (int fixture = 0; fixture < 10; ++fixture) {
    DiagonalZhouWeight phi(fx.direction(2));
    Rational amax = max(phi.a()[0], phi.a()[1]);
    for (int m = 1; m <= 64; ++m) {
      ApproximantFamily fam = approximant(m, phi);
      ck.expect(fam.sigma_m > Rational(1) - Rational(1, m), "sigma_m > 1 - 1/m");
      ck.expect(fam.sigma_m <= Rational(1) + (Rational(1) + amax) / Rational(m),
                "sigma_m <= 1 + (1 + max a_j)/m");
      ck.expect(approximant_dominates_weight(fam), "realized approximant dominates the weight");
    }
  }
  {
    RationalVec a{Rational(2), Rational(2)};
    DiagonalZhouWeight phi(a);
    std::vector<double> z{0.5, 0.5};
    for (int m : {1, 2, 3, 5, 8, 13, 21, 34}) {
      ApproximantFamily fam = approximant(m, phi);
      double gap = fam.realized.value_at_modulus(z) - phi.to_toric().value_at_modulus(z);
      ck.expect(std::abs(gap - std::log(2.0) / m) <= 1e-12, "pointwise gap (1/m) log 2 at (1/2,1/2)");
    }
  }
  {
    std::vector<double> z{0.5, 0.25};
    for (int m : {1, 3, 17}) {
      double g = green_approximant(m, z);
      ck.expect(g == std::max(std::log(0.5), std::log(0.25)),
                "green approximant equals max_j log|z_j| for every m");
    }
  }
}

// ---------------------------------------------------------------------------
// 12. Bit-for-bit reproducibility of the stochastic path.
void suite_reproducibility(std::uint64_t seed, int workers, Checker& ck) {
  int n = 2;
  ReferencePair ref = ReferencePair::trivial(n);
  RationalVec a{Rational(2), Rational(2)};
  DiagonalZhouWeight phi(a);
  ToricWeight psi({Exponent::unit(n, 0), Exponent::unit(n, 1)});
  for (int w : {1, workers, 4}) {
    SublevelIntegral r1 = sublevel_monte_carlo(ref, phi, psi, Rational(8), 200000, seed, w);
    SublevelIntegral r2 = sublevel_monte_carlo(ref, phi, psi, Rational(8), 200000, seed, w);
    ck.expect(std::memcmp(&r1.mass, &r2.mass, sizeof(double)) == 0 &&
                  std::memcmp(&r1.moment, &r2.moment, sizeof(double)) == 0 &&
                  std::memcmp(&r1.stderr_ratio, &r2.stderr_ratio, sizeof(double)) == 0,
              "identical (seed, workers) reproduces bit-identical results");
  }
  // The moment depends on the drawn points (the mass estimator is exact for a
  // trivial twist, so it cannot distinguish seeds).
  SublevelIntegral s1 = sublevel_monte_carlo(ref, phi, psi, Rational(8), 100000, seed, 1);
  SublevelIntegral s2 = sublevel_monte_carlo(ref, phi, psi, Rational(8), 100000, seed + 1, 1);
  ck.expect(s1.moment != s2.moment, "different seeds draw different samples");
}

struct SuiteSpec {
  const char* name;
  const char* anchor;
  double limit_ms;
  SuiteFn fn;
};

const SuiteSpec kSuites[] = {
    {"valuation", "coro:main2", 5000, suite_valuation},
    {"tropical", "coro:main", 10000, suite_tropical},
    {"jumping", "thm:valu-jump", 10000, suite_jumping},
    {"tian-linearity", "prop:concave_B", 30000, suite_tian},
    {"threshold-b0", "lem:combi", 30000, suite_threshold},
    {"integral-formula", "thm:main_value", 60000, suite_integral},
    {"mass-asymptotics", "lem:jump_asyp_C,lem:JM", 10000, suite_mass},
    {"thmA", "thm:A", 60000, suite_thmA},
    {"inclusion", "thm:multi-valua", 120000, suite_inclusion},
    {"division", "coro:multiplier-valuation", 5000, suite_division},
    {"approximation", "thm-approximation,coro:ni95", 60000, suite_approximation},
    {"reproducibility", "determinism", 60000, suite_reproducibility},
};

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const SuiteSpec& s : kSuites) names.emplace_back(s.name);
  return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed, int workers) {
  for (const SuiteSpec& s : kSuites) {
    if (name != s.name) continue;
    SuiteResult res;
    res.name = s.name;
    res.anchor = s.anchor;
    res.limit_ms = s.limit_ms;
    Checker ck;
    auto start = std::chrono::steady_clock::now();
    try {
      s.fn(seed, workers, ck);
    } catch (const std::exception& e) {
      ++ck.failures;
      if (ck.first_failure.empty()) ck.first_failure = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    res.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    res.checks = ck.checks;
    res.failures = ck.failures;
    res.detail = ck.first_failure;
    res.passed = ck.failures == 0 && res.elapsed_ms <= res.limit_ms;
    if (res.passed == false && ck.failures == 0)
      res.detail = "runtime budget exceeded";
    return res;
  }
  throw_validation("unknown verify suite: " + name);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int workers) {
  std::vector<SuiteResult> out;
  for (const SuiteSpec& s : kSuites) out.push_back(run_verify_suite(s.name, seed, workers));
  return out;
}

}  // namespace plurival
